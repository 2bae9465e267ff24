//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails or exceeds its time budget.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use palindromization::pal_suffix::fibonacci;
use palindromization::words::suffixes;
use palindromization::{
    apply_r, build_direct, check_justin_l, check_justin_r, cocycle_witness_search, counting_graph,
    minimal_compact, pal_group, pal_word, pal_word_fast, path_count_to_final, suffix_automaton,
    transition_count, Alphabet, CompactAutomaton, GroupElement, SignedLetter, StateId, Word,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(condition: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if condition {
        Ok(())
    } else {
        Err(message())
    }
}

fn w(s: &str) -> Word {
    Word::from(s)
}

fn abacaba_compact() -> CompactAutomaton {
    let mut a = CompactAutomaton::new(0);
    for q in 0..4 {
        a.add_state(q);
        a.set_terminal(q, true).unwrap();
    }
    for (p, label, q) in [
        (0, "a", 1),
        (0, "ba", 2),
        (1, "ba", 2),
        (0, "caba", 3),
        (1, "caba", 3),
        (2, "caba", 3),
    ] {
        a.add_edge(p, w(label), q).unwrap();
    }
    a
}

fn abacaba_suffix_automaton() -> Outcome {
    let pal = pal_word(&w("abc"));
    ensure(pal == w("abacaba"), || format!("Pal(abc) = {pal}"))?;
    let s = suffix_automaton(&pal);
    ensure(s.num_states() == 8, || format!("{} states", s.num_states()))?;
    let by_prefix = |len: usize| s.run(&pal.letters()[..len]).expect("prefix is read");
    let terminals: BTreeSet<StateId> = [0, 1, 3, 7].into_iter().map(by_prefix).collect();
    ensure(s.terminals() == terminals, || {
        format!("terminals {:?}, expected {:?}", s.terminals(), terminals)
    })?;
    let distinct: BTreeSet<StateId> = (0..=7).map(by_prefix).collect();
    ensure(distinct.len() == 8, || {
        "prefixes do not reach distinct states".into()
    })?;
    // The transitions off the prefix chain: 0 -b-> 2, 0 -c-> 4, 1 -c-> 4.
    for (from, letter, to) in [(0, 'b', 2), (0, 'c', 4), (1, 'c', 4)] {
        ensure(
            s.successor(by_prefix(from), letter) == Some(by_prefix(to)),
            || format!("missing transition {from} -{letter}-> {to}"),
        )?;
    }
    ensure(s.num_transitions() == 10, || {
        format!("{} transitions", s.num_transitions())
    })?;
    for (q, letters) in s.incoming_letters().iter().enumerate() {
        ensure(letters.len() <= 1, || {
            format!("state {q} has incoming letters {letters:?}")
        })?;
    }
    Ok("8 states, terminals at prefixes ε, a, aba, abacaba".into())
}

fn abacaba_direct_construction() -> Outcome {
    let abc = Alphabet::latin(3).unwrap();
    let direct = build_direct(&abc, &w("abc")).map_err(|e| e.to_string())?;
    let oracle = minimal_compact(&suffixes(&w("abacaba"))).map_err(|e| e.to_string())?;
    let a = direct.automaton();
    ensure(a.canonically_eq(&oracle), || {
        "direct construction differs from residual construction".into()
    })?;
    ensure(a.canonically_eq(&abacaba_compact()), || {
        "direct construction differs from the expected automaton".into()
    })?;
    ensure(a.num_states() == 4 && a.terminals().len() == 4, || {
        "expected 4 terminal states".into()
    })?;
    let mut into: Vec<(StateId, String)> = a
        .edges()
        .map(|(_, label, to)| (to, label.to_string()))
        .collect();
    into.sort();
    let expected: Vec<(StateId, String)> = [
        (1, "a"),
        (2, "ba"),
        (2, "ba"),
        (3, "caba"),
        (3, "caba"),
        (3, "caba"),
    ]
    .iter()
    .map(|&(q, l)| (q, l.to_string()))
    .collect();
    ensure(into == expected, || format!("labels by target {into:?}"))?;
    Ok("4 states, 6 edges a/ba/ba/caba/caba/caba".into())
}

fn reduction_chain() -> Outcome {
    let pal = w("abacaba");
    let dfa = suffix_automaton(&pal);
    let state = |len: usize| dfa.run(&pal.letters()[..len]).expect("prefix is read");
    let mut a = dfa.to_compact();
    let expect_edge = |a: &CompactAutomaton, from: usize, label: &str, to: usize| {
        ensure(
            a.outgoing(state(from))
                .any(|e| e.label == w(label) && e.target == state(to)),
            || format!("missing edge {from} -{label}-> {to}"),
        )
    };
    for q in [5, 6] {
        a = a
            .elementary_reduction(state(q))
            .map_err(|e| e.to_string())?;
    }
    ensure(a.num_states() == 6, || {
        "suppressing 5, 6 should leave 6 states".into()
    })?;
    expect_edge(&a, 4, "aba", 7)?;
    a = a
        .elementary_reduction(state(4))
        .map_err(|e| e.to_string())?;
    expect_edge(&a, 3, "caba", 7)?;
    expect_edge(&a, 1, "caba", 7)?;
    expect_edge(&a, 0, "caba", 7)?;
    a = a
        .elementary_reduction(state(2))
        .map_err(|e| e.to_string())?;
    ensure(a.canonically_eq(&abacaba_compact()), || {
        "result differs from the expected automaton".into()
    })?;
    let reduced = a.clone();
    let direct = dfa
        .to_compact()
        .reduce_to_minimal()
        .map_err(|e| e.to_string())?;
    ensure(direct.canonically_eq(&reduced), || {
        "topological suppression order disagrees".into()
    })?;
    Ok("suppressing 5, 6, 4, 2 gives the 4-state compact automaton".into())
}

fn incremental_consistency() -> Outcome {
    let abc = Alphabet::latin(3).unwrap();
    let mut checked = 0;
    for u in abc.words_up_to(6) {
        let base = build_direct(&abc, &u).map_err(|e| e.to_string())?;
        for &x in abc.letters() {
            let mut ux = u.clone();
            ux.push(x);
            let extended = base.extend(x).map_err(|e| e.to_string())?;
            let direct = build_direct(&abc, &ux).map_err(|e| e.to_string())?;
            ensure(extended == direct, || format!("extend({u}, {x}) differs"))?;
            ensure(
                extended.automaton().canonically_eq(direct.automaton()),
                || format!("extend({u}, {x}) differs canonically"),
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} extensions"))
}

fn oracle_sweep(mut check: impl FnMut(&Word) -> Result<(), String>) -> Outcome {
    let mut checked = 0;
    for size in [2, 3] {
        let alphabet = Alphabet::latin(size).unwrap();
        for u in alphabet.words_up_to(6) {
            check(&u)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} directives"))
}

fn oracle_equivalence() -> Outcome {
    let abc = Alphabet::latin(3).unwrap();
    oracle_sweep(|u| {
        let pal = pal_word(u);
        let direct = build_direct(&abc, u).map_err(|e| e.to_string())?;
        let reduced = suffix_automaton(&pal)
            .to_compact()
            .reduce_to_minimal()
            .map_err(|e| e.to_string())?;
        let minimal = minimal_compact(&suffixes(&pal)).map_err(|e| e.to_string())?;
        ensure(direct.automaton().canonically_eq(&reduced), || {
            format!("u = {u}: direct construction differs from reduced suffix automaton")
        })?;
        ensure(reduced.canonically_eq(&minimal), || {
            format!("u = {u}: reduced suffix automaton differs from minimal compact automaton")
        })
    })
}

fn counting_formulas() -> Outcome {
    let abc = Alphabet::latin(3).unwrap();
    oracle_sweep(|u| {
        let s = build_direct(&abc, u).map_err(|e| e.to_string())?;
        let a = s.automaton();
        ensure(a.num_states() == u.len() + 1, || {
            format!("u = {u}: {} states", a.num_states())
        })?;
        ensure(a.num_edges() == transition_count(u), || {
            format!(
                "u = {u}: {} edges, formula {}",
                a.num_edges(),
                transition_count(u)
            )
        })?;
        let expected = match u.without_last() {
            None => 1,
            Some(shorter) => (pal_word(u).len() - pal_word(&shorter).len()) as u64,
        };
        let paths = path_count_to_final(u);
        ensure(paths == expected, || {
            format!("u = {u}: {paths} paths, formula {expected}")
        })
    })
}

fn random_element(rng: &mut StdRng, letters: &[char], max_len: usize) -> GroupElement {
    let len = rng.gen_range(0..=max_len);
    GroupElement::new((0..len).map(|_| {
        let letter = letters[rng.gen_range(0..letters.len())];
        if rng.gen_bool(0.5) {
            SignedLetter::positive(letter)
        } else {
            SignedLetter::negative(letter)
        }
    }))
}

fn justin_formulas() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let letters = ['a', 'b', 'c'];
    for _ in 0..10_000 {
        let u = random_element(&mut rng, &letters, 6);
        let v = random_element(&mut rng, &letters, 6);
        ensure(check_justin_r(&u, &v), || {
            format!("R-form fails for u = {u}, v = {v}")
        })?;
        ensure(check_justin_l(&u, &v), || {
            format!("L-form fails for u = {u}, v = {v}")
        })?;
        for x in [&u, &v] {
            ensure(pal_group(x).is_palindrome(), || {
                format!("Pal({x}) is not a palindrome")
            })?;
        }
    }
    Ok("10000 random pairs".into())
}

fn cocycle_results() -> Outcome {
    let ab = Alphabet::latin(2).unwrap();
    let witness = cocycle_witness_search(&ab, 2);
    let x: GroupElement = "ab".parse().unwrap();
    ensure(witness.as_ref() == Some(&x), || {
        format!("binary search returned {witness:?}")
    })?;
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for _ in 0..1_000 {
        let u = random_element(&mut rng, &['a', 'b'], 8);
        let trivialized = x.invert().multiply(&apply_r(&u, &x));
        ensure(pal_group(&u) == trivialized, || {
            format!("Pal({u}) != (ab)⁻¹R_u(ab)")
        })?;
    }
    let abc = Alphabet::latin(3).unwrap();
    let none = cocycle_witness_search(&abc, 6);
    ensure(none.is_none(), || {
        format!("ternary search returned {none:?}")
    })?;
    Ok("x = ab over {a,b}; no witness up to length 6 over {a,b,c}".into())
}

fn fibonacci_growth() -> Outcome {
    for n in 1..=12 {
        let directive = w(&"ab".repeat(n));
        let len = pal_word(&directive).len() as u64;
        let expected = fibonacci(2 * n + 3) - 2;
        ensure(len == expected, || {
            format!("n = {n}: |Pal| = {len}, expected {expected}")
        })?;
        ensure(pal_word_fast(&directive).len() as u64 == expected, || {
            format!("n = {n}: fast construction disagrees")
        })?;
    }
    Ok("n = 1..12, |Pal((ab)^12)| = 196416".into())
}

fn counting_graph_property() -> Outcome {
    let abc = Alphabet::latin(3).unwrap();
    let mut checked = 0;
    for u in abc.words_up_to(6) {
        let graph = counting_graph(&u);
        ensure(graph.total == pal_word(&u).len(), || {
            format!("u = {u}: wrong total")
        })?;
        graph
            .verify_counting()
            .map_err(|e| format!("u = {u}: {e}"))?;
        checked += 1;
    }
    Ok(format!("{checked} directives"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "Suffix automaton of abacaba",
            budget: Duration::from_secs(1),
            run: abacaba_suffix_automaton,
        },
        Criterion {
            id: 2,
            name: "Compact suffix automaton of abacaba",
            budget: Duration::from_secs(1),
            run: abacaba_direct_construction,
        },
        Criterion {
            id: 3,
            name: "Elementary reduction chain",
            budget: Duration::MAX,
            run: reduction_chain,
        },
        Criterion {
            id: 4,
            name: "Incremental consistency",
            budget: Duration::from_secs(60),
            run: incremental_consistency,
        },
        Criterion {
            id: 5,
            name: "Oracle equivalence",
            budget: Duration::from_secs(300),
            run: oracle_equivalence,
        },
        Criterion {
            id: 6,
            name: "Counting formulas",
            budget: Duration::MAX,
            run: counting_formulas,
        },
        Criterion {
            id: 7,
            name: "Prefix product formulas",
            budget: Duration::from_secs(30),
            run: justin_formulas,
        },
        Criterion {
            id: 8,
            name: "Cocycle results",
            budget: Duration::MAX,
            run: cocycle_results,
        },
        Criterion {
            id: 9,
            name: "Fibonacci growth",
            budget: Duration::from_secs(5),
            run: fibonacci_growth,
        },
        Criterion {
            id: 10,
            name: "Counting-graph property",
            budget: Duration::from_secs(60),
            run: counting_graph_property,
        },
    ];
    let mut failures = 0;
    for criterion in &criteria {
        let start = Instant::now();
        let outcome = (criterion.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > criterion.budget => Err(format!(
                "{detail}; took {:.2} s, budget {:.0} s",
                elapsed.as_secs_f64(),
                criterion.budget.as_secs_f64()
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "PASS  [{:>2}] {}: {} ({:.2} s)",
                criterion.id,
                criterion.name,
                detail,
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                failures += 1;
                println!("FAIL  [{:>2}] {}: {}", criterion.id, criterion.name, detail);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
