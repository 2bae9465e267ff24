//! `palaut`: palindromic closure, its suffix automata and verification sweeps.

mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use palindromization::words::palindromic_closure;
use palindromization::{
    build_direct, pal_group, pal_length, pal_word_fast, suffix_automaton, Alphabet, GroupElement,
    Word,
};

const DEFAULT_MAX_PAL_LEN: usize = 10_000_000;
/// The residual construction of the suffix automaton is quadratic in `|Pal(u)|`.
const SUFFIX_KIND_MAX_PAL_LEN: usize = 20_000;

#[derive(Parser)]
#[command(
    name = "palaut",
    version,
    about = "Iterated palindromic closure and its suffix automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Pal(input), on words or (with --group) on the free group.
    Pal {
        input: String,
        /// Read the input as a free group element: uppercase letters are inverses.
        #[arg(long)]
        group: bool,
        /// Declared alphabet, e.g. "abc". Inferred from the input by default.
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_PAL_LEN)]
        max_pal_len: usize,
    },
    /// Print the palindromic closure of a word.
    Closure {
        input: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Print an automaton attached to Pal(directive).
    Automaton {
        directive: String,
        #[arg(long, value_enum, default_value_t = Kind::Compact)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_PAL_LEN)]
        max_pal_len: usize,
    },
    /// Check the library's invariants exhaustively on every directive up to a length.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Scope::All)]
        scope: verify::Scope,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Alphabet size, 1 to 4.
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Longest candidate tried by the cocycle witness search.
        #[arg(long, default_value_t = 6)]
        witness_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Minimal automaton of the suffixes of Pal(u).
    Suffix,
    /// Minimal compact automaton of the suffixes of Pal(u).
    Compact,
    /// Compact automaton with labels replaced by their lengths.
    Counting,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

fn alphabet_for(declared: Option<&str>, input: &str) -> Result<Alphabet> {
    let alphabet = match declared {
        Some(letters) => Alphabet::new(letters.chars())?,
        None if input.chars().any(|c| c.is_ascii_alphabetic()) => Alphabet::infer(input)?,
        None => Alphabet::new(['a'])?,
    };
    Ok(alphabet)
}

fn guard(u: &Word, limit: usize) -> Result<usize> {
    match pal_length(u) {
        Some(len) if len <= limit => Ok(len),
        Some(len) => bail!("|Pal({u})| = {len} exceeds the limit {limit} (see --max-pal-len)"),
        None => bail!("|Pal({u})| overflows (limit {limit})"),
    }
}

fn cmd_pal(input: &str, group: bool, alphabet: Option<&str>, limit: usize) -> Result<String> {
    let alphabet = alphabet_for(alphabet, input)?;
    if group {
        let u: GroupElement = input.parse().context("cannot parse group element")?;
        u.check(&alphabet)?;
        // Cancellation only shortens, so Pal of the unsigned letters bounds the result.
        let unsigned: Word = u.letters().iter().map(|s| s.letter).collect();
        guard(&unsigned, limit)?;
        Ok(pal_group(&u).to_string())
    } else {
        let u = alphabet.parse_word(input)?;
        guard(&u, limit)?;
        Ok(pal_word_fast(&u).to_string())
    }
}

fn cmd_closure(input: &str, alphabet: Option<&str>) -> Result<String> {
    let w = alphabet_for(alphabet, input)?.parse_word(input)?;
    Ok(palindromic_closure(&w).to_string())
}

fn cmd_automaton(
    directive: &str,
    kind: Kind,
    format: Format,
    alphabet: Option<&str>,
    limit: usize,
) -> Result<String> {
    let alphabet = alphabet_for(alphabet, directive)?;
    let u = alphabet.parse_word(directive)?;
    let output = match kind {
        Kind::Suffix => {
            let limit = limit.min(SUFFIX_KIND_MAX_PAL_LEN);
            guard(&u, limit)?;
            let automaton = suffix_automaton(&pal_word_fast(&u)).to_compact();
            match format {
                Format::Text => render::text(&automaton.to_json_graph()),
                Format::Dot => automaton.to_dot(),
                Format::Json => automaton.to_json(),
            }
        }
        Kind::Compact => {
            guard(&u, limit)?;
            let automaton = build_direct(&alphabet, &u)?;
            let automaton = automaton.automaton();
            match format {
                Format::Text => render::text(&automaton.to_json_graph()),
                Format::Dot => automaton.to_dot(),
                Format::Json => automaton.to_json(),
            }
        }
        Kind::Counting => {
            guard(&u, limit)?;
            let graph = build_direct(&alphabet, &u)?.counting_graph();
            match format {
                Format::Text => render::text(&graph.to_json_graph()),
                Format::Dot => graph.to_dot(),
                Format::Json => graph.to_json(),
            }
        }
    };
    Ok(output)
}

fn print(output: &str) -> Result<()> {
    let mut stdout = std::io::stdout().lock();
    if output.ends_with('\n') {
        stdout.write_all(output.as_bytes())?;
    } else {
        writeln!(stdout, "{output}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Pal {
            input,
            group,
            alphabet,
            max_pal_len,
        } => {
            print(&cmd_pal(&input, group, alphabet.as_deref(), max_pal_len)?)?;
        }
        Command::Closure { input, alphabet } => {
            print(&cmd_closure(&input, alphabet.as_deref())?)?;
        }
        Command::Automaton {
            directive,
            kind,
            format,
            alphabet,
            max_pal_len,
        } => {
            print(&cmd_automaton(
                &directive,
                kind,
                format,
                alphabet.as_deref(),
                max_pal_len,
            )?)?;
        }
        Command::Verify {
            scope,
            max_len,
            alphabet,
            witness_len,
        } => {
            let config = verify::Config::new(scope, max_len, alphabet, witness_len)?;
            let report = verify::run(&config);
            print(&report.summary())?;
            if let Some(failure) = &report.failure {
                eprintln!("counterexample: {failure}");
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pal_examples() {
        assert_eq!(
            cmd_pal("abc", false, None, DEFAULT_MAX_PAL_LEN).unwrap(),
            "abacaba"
        );
        assert_eq!(cmd_pal("aB", true, None, DEFAULT_MAX_PAL_LEN).unwrap(), "B");
        assert_eq!(cmd_pal("", false, None, DEFAULT_MAX_PAL_LEN).unwrap(), "");
        assert_eq!(cmd_pal("aA", true, None, DEFAULT_MAX_PAL_LEN).unwrap(), "1");
    }

    #[test]
    fn pal_rejects_bad_input() {
        assert!(cmd_pal("aB", false, None, DEFAULT_MAX_PAL_LEN).is_err());
        assert!(cmd_pal("a1", true, None, DEFAULT_MAX_PAL_LEN).is_err());
        assert!(cmd_pal("abd", false, Some("abc"), DEFAULT_MAX_PAL_LEN).is_err());
        assert!(cmd_pal(&"ab".repeat(20), false, None, DEFAULT_MAX_PAL_LEN).is_err());
    }

    #[test]
    fn closure_example() {
        assert_eq!(cmd_closure("abac", None).unwrap(), "abacaba");
    }

    #[test]
    fn empty_counting_graph_has_one_vertex() {
        let json =
            cmd_automaton("", Kind::Counting, Format::Json, None, DEFAULT_MAX_PAL_LEN).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["states"].as_array().unwrap().len(), 1);
        assert!(value["edges"].as_array().unwrap().is_empty());
    }
}
