//! Exhaustive sweeps over every directive up to a given length.

use anyhow::{bail, Result};
use clap::ValueEnum;
use palindromization::pal::cocycle_identity_holds;
use palindromization::words::suffixes;
use palindromization::{
    build_direct, check_justin_l, check_justin_r, cocycle_witness_search, compute_reduction,
    minimal_compact, pal_group, pal_length, pal_word, suffix_automaton, transition_count,
    verify_pal_suffix_theorem, Alphabet, GroupElement, Word,
};

const MAX_DIRECTIVES: usize = 1_000_000;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    All,
    /// Prefix product formulas on the free group and the cocycle witness.
    Justin,
    SuffixTheorem,
    Compact,
    Counts,
}

impl Scope {
    fn name(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::Justin => "justin",
            Scope::SuffixTheorem => "suffix-theorem",
            Scope::Compact => "compact",
            Scope::Counts => "counts",
        }
    }

    fn expand(self) -> Vec<Scope> {
        match self {
            Scope::All => vec![
                Scope::Justin,
                Scope::SuffixTheorem,
                Scope::Compact,
                Scope::Counts,
            ],
            other => vec![other],
        }
    }
}

pub struct Config {
    scope: Scope,
    max_len: usize,
    alphabet: Alphabet,
    witness_len: usize,
}

impl Config {
    pub fn new(
        scope: Scope,
        max_len: usize,
        alphabet_size: usize,
        witness_len: usize,
    ) -> Result<Self> {
        if !(1..=4).contains(&alphabet_size) {
            bail!("--alphabet must be between 1 and 4, got {alphabet_size}");
        }
        let alphabet = Alphabet::latin(alphabet_size)?;
        let config = Config {
            scope,
            max_len,
            alphabet,
            witness_len,
        };
        for scope in scope.expand() {
            let count = config.directive_count(scope);
            if count > MAX_DIRECTIVES {
                bail!(
                    "{} sweep would check {count} directives, more than {MAX_DIRECTIVES}; lower --max-len",
                    scope.name()
                );
            }
        }
        Ok(config)
    }

    fn directive_count(&self, scope: Scope) -> usize {
        let k = self.alphabet.len();
        if scope == Scope::Justin {
            // Reduced elements: 1 + 2k·Σ (2k−1)^(n−1).
            let mut total = 1usize;
            let mut layer = 2 * k;
            for _ in 0..self.max_len {
                total = total.saturating_add(layer);
                layer = layer.saturating_mul(2 * k - 1);
            }
            total
        } else {
            self.alphabet.count_words_up_to(self.max_len)
        }
    }
}

pub struct Report {
    /// Directives checked per scope, in order.
    pub checked: Vec<(Scope, usize)>,
    pub failure: Option<String>,
}

impl Report {
    pub fn summary(&self) -> String {
        let mut lines: Vec<String> = self
            .checked
            .iter()
            .map(|(scope, n)| format!("{}: checked {n} directives", scope.name()))
            .collect();
        lines.push(if self.failure.is_none() {
            "pass".into()
        } else {
            "FAIL".into()
        });
        lines.join("\n")
    }
}

pub fn run(config: &Config) -> Report {
    let mut report = Report {
        checked: Vec::new(),
        failure: None,
    };
    for scope in config.scope.expand() {
        let outcome = match scope {
            Scope::Justin => justin(config),
            Scope::SuffixTheorem => sweep_words(config, suffix_theorem),
            Scope::Compact => sweep_words(config, compact),
            Scope::Counts => sweep_words(config, counts),
            Scope::All => unreachable!("expanded above"),
        };
        match outcome {
            Ok(n) => report.checked.push((scope, n)),
            Err(failure) => {
                report.failure = Some(format!("[{}] {failure}", scope.name()));
                break;
            }
        }
    }
    report
}

type Check = fn(&Alphabet, &Word) -> Result<(), String>;

fn sweep_words(config: &Config, check: Check) -> Result<usize, String> {
    let mut checked = 0;
    for u in config.alphabet.words_up_to(config.max_len) {
        check(&config.alphabet, &u)?;
        checked += 1;
    }
    Ok(checked)
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn suffix_theorem(_: &Alphabet, u: &Word) -> Result<(), String> {
    let report = verify_pal_suffix_theorem(u);
    match report.failure {
        None => Ok(()),
        Some(failure) => Err(format!("u = {u:?}: {failure}")),
    }
}

fn compact(alphabet: &Alphabet, u: &Word) -> Result<(), String> {
    let pal = pal_word(u);
    let direct = build_direct(alphabet, u).map_err(|e| e.to_string())?;
    let suffix = suffix_automaton(&pal).to_compact();
    let reduced = suffix.reduce_to_minimal().map_err(|e| e.to_string())?;
    let minimal = minimal_compact(&suffixes(&pal)).map_err(|e| e.to_string())?;
    ensure(direct.automaton().canonically_eq(&reduced), || {
        format!("u = {u:?}: direct construction differs from the reduced suffix automaton")
    })?;
    ensure(reduced.canonically_eq(&minimal), || {
        format!("u = {u:?}: reduced suffix automaton differs from the minimal compact automaton")
    })?;
    let reduction = compute_reduction(&suffix).map_err(|e| format!("u = {u:?}: {e}"))?;
    ensure(reduction.target.canonically_eq(&minimal), || {
        format!("u = {u:?}: reduction target differs from the minimal compact automaton")
    })?;
    for &x in alphabet.letters() {
        let mut ux = u.clone();
        ux.push(x);
        let extended = direct.extend(x).map_err(|e| e.to_string())?;
        let rebuilt = build_direct(alphabet, &ux).map_err(|e| e.to_string())?;
        ensure(extended == rebuilt, || {
            format!("u = {u:?}: extending by {x:?} differs from rebuilding")
        })?;
    }
    Ok(())
}

fn counts(alphabet: &Alphabet, u: &Word) -> Result<(), String> {
    let s = build_direct(alphabet, u).map_err(|e| e.to_string())?;
    let a = s.automaton();
    let pal_len = s.pal().len();
    ensure(pal_length(u) == Some(pal_len), || {
        format!("u = {u:?}: length formula disagrees")
    })?;
    ensure(a.num_states() == u.len() + 1, || {
        format!(
            "u = {u:?}: {} states, expected {}",
            a.num_states(),
            u.len() + 1
        )
    })?;
    ensure(a.num_edges() == transition_count(u), || {
        format!(
            "u = {u:?}: {} edges, expected {}",
            a.num_edges(),
            transition_count(u)
        )
    })?;
    let expected_paths = match u.without_last() {
        None => 1,
        Some(shorter) => (pal_len - pal_word(&shorter).len()) as u64,
    };
    ensure(s.path_count_to_final() == expected_paths, || {
        format!(
            "u = {u:?}: {} paths to the last state, expected {expected_paths}",
            s.path_count_to_final()
        )
    })?;
    s.counting_graph()
        .verify_counting()
        .map_err(|v| format!("u = {u:?}: counting graph: {v}"))
}

fn justin(config: &Config) -> Result<usize, String> {
    let short: Vec<GroupElement> = GroupElement::enumerate(&config.alphabet, 1);
    let witness = cocycle_witness_search(&config.alphabet, config.witness_len);
    let expected: Option<GroupElement> =
        (config.alphabet.len() == 2).then(|| "ab".parse().expect("valid element"));
    if config.witness_len >= 2 || expected.is_none() {
        ensure(witness == expected, || {
            format!(
                "cocycle witness search up to length {} returned {}, expected {}",
                config.witness_len,
                describe(&witness),
                describe(&expected)
            )
        })?;
    }
    let mut checked = 0;
    for u in GroupElement::enumerate(&config.alphabet, config.max_len) {
        let pal = pal_group(&u);
        ensure(pal.is_palindrome(), || {
            format!("u = {u}: Pal(u) = {pal} is not a palindrome")
        })?;
        if let Some(word) = u.to_word() {
            ensure(pal.to_word() == Some(pal_word(&word)), || {
                format!("u = {u}: group and monoid Pal disagree")
            })?;
        }
        for v in &short {
            ensure(check_justin_r(&u, v), || {
                format!("u = {u}, v = {v}: Pal(uv) != Pal(u)R_u(Pal(v))")
            })?;
            ensure(check_justin_l(&u, v), || {
                format!("u = {u}, v = {v}: Pal(uv) != L_u(Pal(v))Pal(u)")
            })?;
        }
        if let Some(x) = &witness {
            ensure(cocycle_identity_holds(x, &u), || {
                format!("u = {u}: Pal(u) != x⁻¹R_u(x) for x = {x}")
            })?;
        }
        checked += 1;
    }
    Ok(checked)
}

fn describe(x: &Option<GroupElement>) -> String {
    x.as_ref()
        .map_or_else(|| "none".to_string(), GroupElement::to_string)
}
