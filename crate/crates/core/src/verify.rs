//! Bounded exhaustive self-checks, one per numbered criterion, runnable
//! sequentially or in parallel.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::enumeration::{
    check_identity_xyxy, count_qrt, hypo_class, hypo_class_size, hypo_class_size_brute,
    novelli_recursion_check, ClassSizeQuery,
};
use crate::exec::Execution;
use crate::graph::{
    crystal_overlay, explore_component, involution_edge_check, ComponentAtlas, GraphKind,
};
use crate::operators::{kashiwara_e, kashiwara_f, quasi_e, quasi_f};
use crate::ribbon::{
    highest_weight_qrw, hypo_congruent, hypo_rsk, hypo_rsk_inverse, hypoplactic_relations,
    is_quasi_ribbon_word, qr_tabloid_of, quasi_ribbon_tableaux, slide_up_slide_left,
    QuasiRibbonTableau, RecordingRibbon,
};
use crate::words::{
    all_words_up_to, compositions_of, descent_composition, standardize, weight, weight_leq,
    Composition, Word,
};
use crate::young::{plactic_congruent, rsk};

pub const CRITERIA: [&str; 12] = [
    "class-size worked examples",
    "class-size formula matches enumeration",
    "tableau count matches enumeration and component size",
    "coarsening sum of class sizes equals the multinomial",
    "same position in isomorphic components iff congruent",
    "same component iff same recording ribbon",
    "insertion round trips",
    "worked examples",
    "operator laws",
    "presentation generates the congruence",
    "xyxy = yxyx",
    "crystal and quasi-crystal structure",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{:>2}] {}", self.id, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn comp(p: &[usize]) -> Composition {
    Composition::new(p.to_vec()).expect("literal composition")
}

/// Runs criterion `id` (1-based).
pub fn run(id: usize, exec: Execution) -> CheckReport {
    let outcome = match id {
        1 => class_size_examples(),
        2 => formula_vs_brute(exec),
        3 => qrt_counts(exec),
        4 => coarsening_sums(exec),
        5 => central_theorem(exec),
        6 => recording_ribbons(exec),
        7 => round_trips(exec),
        8 => worked_examples(),
        9 => operator_laws(exec),
        10 => presentation(exec),
        11 => identity(exec),
        12 => structure(exec),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckReport {
        id,
        name: CRITERIA
            .get(id.wrapping_sub(1))
            .copied()
            .unwrap_or("unknown"),
        passed,
        detail,
    }
}

pub fn run_all(exec: Execution) -> Vec<CheckReport> {
    (1..=CRITERIA.len()).map(|id| run(id, exec)).collect()
}

fn class_size_examples() -> Outcome {
    let size = hypo_class_size(&ClassSizeQuery::new(comp(&[2, 1, 1, 2]), 4));
    ensure(size == BigUint::from(19u32), || {
        format!("(2,1,1,2) gave {size}")
    })?;
    let listed: HashSet<Word> = [
        "143214", "413214", "431214", "432114", "143241", "413241", "431241", "432141", "143421",
        "413421", "431421", "432411", "144321", "414321", "434121", "434211", "441321", "443121",
        "443211",
    ]
    .iter()
    .map(|s| w(s))
    .collect();
    let class: HashSet<Word> = hypo_class(&w("143214"))
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure(class == listed, || {
        format!("class of 143214 has {} words", class.len())
    })?;
    let size = hypo_class_size(&ClassSizeQuery::new(comp(&[1, 2, 2, 1]), 4));
    ensure(size == BigUint::from(61u32), || {
        format!("(1,2,2,1) gave {size}")
    })?;
    Ok(String::new())
}

fn compositions_up_to(k: usize) -> Vec<Composition> {
    (0..=k).flat_map(compositions_of).collect()
}

fn formula_vs_brute(exec: Execution) -> Outcome {
    let items: Vec<(Composition, u32)> = compositions_up_to(6)
        .into_iter()
        .flat_map(|a| (3..=5).map(move |n| (a.clone(), n)))
        .collect();
    let bad = exec.find_failure(&items, |(a, n)| {
        let q = ClassSizeQuery::new(a.clone(), *n);
        hypo_class_size_brute(&q)
            .map(|b| b == hypo_class_size(&q))
            .unwrap_or(false)
    });
    ensure(bad.is_none(), || {
        format!("mismatch at {:?}", bad.map(|k| &items[k]))
    })?;
    Ok(format!("{} cases", items.len()))
}

/// Size of the quasi-crystal component of `u` over `1..=n`, or 0 if `u` does not fit.
fn component_size(u: &Word, n: u32) -> usize {
    explore_component(u, n, GraphKind::QuasiCrystal).map_or(0, |c| c.len())
}

fn qrt_counts(exec: Execution) -> Outcome {
    let items: Vec<(Composition, u32)> = compositions_up_to(6)
        .into_iter()
        .flat_map(|a| (1..=5).map(move |n| (a.clone(), n)))
        .collect();
    let bad = exec.find_failure(&items, |(a, n)| {
        let formula = count_qrt(a, *n);
        let generated = BigUint::from(quasi_ribbon_tableaux(a, *n).len());
        let component = BigUint::from(component_size(&highest_weight_qrw(a), *n));
        formula == generated && formula == component
    });
    ensure(bad.is_none(), || {
        format!("mismatch at {:?}", bad.map(|k| &items[k]))
    })?;
    Ok(format!("{} cases", items.len()))
}

fn coarsening_sums(exec: Execution) -> Outcome {
    let items: Vec<Composition> = compositions_up_to(6)
        .into_iter()
        .filter(|a| a.len() <= 4)
        .collect();
    let bad = exec.find_failure(&items, |a| novelli_recursion_check(a, 4).unwrap_or(false));
    ensure(bad.is_none(), || {
        format!("fails at {:?}", bad.map(|k| &items[k]))
    })?;
    Ok(format!("{} compositions", items.len()))
}

fn weight_classes(words: Vec<Word>) -> Vec<Vec<Word>> {
    let mut classes: HashMap<(usize, Vec<usize>), Vec<Word>> = HashMap::new();
    for u in words {
        classes
            .entry((u.len(), weight(&u).terms().to_vec()))
            .or_default()
            .push(u);
    }
    let mut out: Vec<Vec<Word>> = classes.into_values().collect();
    out.sort();
    out
}

fn central_theorem(exec: Execution) -> Outcome {
    let words = all_words_up_to(3, 5);
    let atlas = ComponentAtlas::build(&words, 3, GraphKind::QuasiCrystal, exec)
        .map_err(|e| e.to_string())?;
    let classes = weight_classes(words);
    let bad = exec.find_failure(&classes, |class| {
        class.iter().all(|u| {
            class
                .iter()
                .all(|v| atlas.sim_related(u, v) == Some(hypo_congruent(u, v)))
        })
    });
    ensure(bad.is_none(), || {
        format!(
            "disagreement in weight class {:?}",
            bad.map(|k| &classes[k][0])
        )
    })?;
    Ok(format!("{} weight classes", classes.len()))
}

fn recording_ribbons(exec: Execution) -> Outcome {
    let words = all_words_up_to(3, 5);
    let atlas = ComponentAtlas::build(&words, 3, GraphKind::QuasiCrystal, exec)
        .map_err(|e| e.to_string())?;
    let ribbons = exec.map(&words, |u| hypo_rsk(u).1);
    let mut comp_to_r: HashMap<usize, &RecordingRibbon> = HashMap::new();
    let mut r_to_comp: HashMap<&RecordingRibbon, usize> = HashMap::new();
    for (u, r) in words.iter().zip(&ribbons) {
        let c = atlas.locate(u).ok_or_else(|| format!("{u} not located"))?.0;
        ensure(*comp_to_r.entry(c).or_insert(r) == r, || {
            format!("component of {u} has two ribbons")
        })?;
        ensure(*r_to_comp.entry(r).or_insert(c) == c, || {
            format!("ribbon of {u} spans two components")
        })?;
    }
    Ok(format!("{} components", comp_to_r.len()))
}

fn round_trips(exec: Execution) -> Outcome {
    let words = all_words_up_to(4, 5);
    let bad = exec.find_failure(&words, |u| {
        let (t, r) = hypo_rsk(u);
        hypo_rsk_inverse(&t, &r).as_ref() == Ok(u)
    });
    ensure(bad.is_none(), || {
        format!("inverse fails on {:?}", bad.map(|k| &words[k]))
    })?;
    let words = all_words_up_to(3, 6);
    let pairs: HashSet<_> = exec.map(&words, rsk).into_iter().collect();
    ensure(pairs.len() == words.len(), || {
        "classical insertion is not injective".into()
    })?;
    Ok(String::new())
}

fn worked_examples() -> Outcome {
    let s = standardize(&w("243245565"));
    ensure(s == w("143256798"), || format!("std gave {s}"))?;
    let d = descent_composition(&s).map_err(|e| e.to_string())?;
    ensure(d == comp(&[2, 1, 5, 1]), || {
        format!("descent composition gave {d}")
    })?;
    let wt = weight(&w("542164325224"));
    ensure(wt.terms() == [1, 4, 1, 3, 2, 1], || {
        format!("weight gave {wt:?}")
    })?;
    let (t, r) = hypo_rsk(&w("4323"));
    ensure(t.rows() == [vec![2], vec![3, 3], vec![4]], || {
        format!("QRT(4323) = {:?}", t.rows())
    })?;
    ensure(r.rows() == [vec![3], vec![2, 4], vec![1]], || {
        format!("R(4323) = {:?}", r.rows())
    })?;
    let t = QuasiRibbonTableau::new(
        comp(&[3, 1, 5, 2]),
        vec![vec![1, 2, 2], vec![3], vec![4, 4, 5, 5, 5], vec![6, 7]],
    )
    .map_err(|e| e.to_string())?;
    let r = RecordingRibbon::new(
        comp(&[3, 1, 5, 2]),
        vec![vec![1, 2, 9], vec![8], vec![3, 4, 6, 7, 11], vec![5, 10]],
    )
    .map_err(|e| e.to_string())?;
    let u = hypo_rsk_inverse(&t, &r).map_err(|e| e.to_string())?;
    ensure(u == w("12446553275"), || format!("inverse gave {u}"))?;
    let t = hypo_rsk(&w("1325436768")).0;
    let p = slide_up_slide_left(&t).map_err(|e| e.to_string())?;
    ensure(
        p.rows() == [vec![1, 2, 3, 6, 6, 8], vec![3, 4, 7], vec![5]],
        || format!("P = {:?}", p.rows()),
    )?;
    let q =
        slide_up_slide_left(&QuasiRibbonTableau::standard(t.shape())).map_err(|e| e.to_string())?;
    ensure(
        q.rows() == [vec![1, 2, 4, 7, 8, 10], vec![3, 5, 9], vec![6]],
        || format!("Q = {:?}", q.rows()),
    )?;
    let hw = highest_weight_qrw(&comp(&[3, 1, 5, 2]));
    ensure(hw == w("11321333434"), || {
        format!("highest weight word {hw}")
    })?;
    ensure(quasi_f(&w("3113"), 1) == Some(w("3123")), || {
        "f_1(3113)".into()
    })?;
    let sim = crate::graph::sim_related(&w("1324"), &w("3142"), 4).map_err(|e| e.to_string())?;
    ensure(sim, || "1324 and 3142 not related".into())?;
    ensure(plactic_congruent(&w("2213"), &w("2231")), || {
        "2213 and 2231 not congruent".into()
    })?;
    Ok(String::new())
}

/// The operator laws for one word over `1..=n`; `Err` names the first failure.
pub fn operator_laws_hold(u: &Word, n: u32) -> std::result::Result<(), String> {
    let tabloid_shape = qr_tabloid_of(u).shape();
    let qr = is_quasi_ribbon_word(u);
    let wt = weight(u);
    for i in 1..n {
        for (up, down) in [
            (kashiwara_e(u, i), kashiwara_f(u, i)),
            (quasi_e(u, i), quasi_f(u, i)),
        ] {
            if let Some(v) = &up {
                ensure(weight_leq(&wt, &weight(v)) && weight(v) != wt, || {
                    format!("e_{i} raises {u}")
                })?;
            }
            if let Some(v) = &down {
                ensure(weight_leq(&weight(v), &wt) && weight(v) != wt, || {
                    format!("f_{i} lowers {u}")
                })?;
            }
        }
        if let Some(v) = kashiwara_e(u, i) {
            ensure(kashiwara_f(&v, i).as_ref() == Some(u), || {
                format!("f_{i} e_{i} {u}")
            })?;
            ensure(qr_tabloid_of(&v).shape() == tabloid_shape, || {
                format!("tabloid shape e_{i} {u}")
            })?;
        }
        if let Some(v) = kashiwara_f(u, i) {
            ensure(kashiwara_e(&v, i).as_ref() == Some(u), || {
                format!("e_{i} f_{i} {u}")
            })?;
            ensure(qr_tabloid_of(&v).shape() == tabloid_shape, || {
                format!("tabloid shape f_{i} {u}")
            })?;
        }
        for (quasi, full) in [
            (quasi_e(u, i), kashiwara_e(u, i)),
            (quasi_f(u, i), kashiwara_f(u, i)),
        ] {
            if let Some(v) = quasi {
                ensure(full.as_ref() == Some(&v), || {
                    format!("quasi operator {i} not a restriction at {u}")
                })?;
                ensure(standardize(&v) == standardize(u), || {
                    format!("standardization moves at {u}")
                })?;
                ensure(!qr || is_quasi_ribbon_word(&v), || {
                    format!("quasi-ribbon lost at {u}")
                })?;
            }
        }
        if let Some(v) = quasi_e(u, i) {
            ensure(quasi_f(&v, i).as_ref() == Some(u), || {
                format!("quasi f_{i} e_{i} {u}")
            })?;
        }
        if let Some(v) = quasi_f(u, i) {
            ensure(quasi_e(&v, i).as_ref() == Some(u), || {
                format!("quasi e_{i} f_{i} {u}")
            })?;
        }
    }
    Ok(())
}

/// `count` random words over `1..=n` of length at most `max_len`, reproducibly.
pub fn random_words(seed: u64, count: usize, n: u32, max_len: usize) -> Vec<Word> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            Word::new((0..len).map(|_| rng.gen_range(1..=n)).collect()).expect("positive symbols")
        })
        .collect()
}

fn operator_laws(exec: Execution) -> Outcome {
    let small = all_words_up_to(3, 5);
    let random = random_words(0x5eed, 1000, 5, 8);
    for (words, n) in [(&small, 3), (&random, 5)] {
        let failures: Vec<String> = exec
            .map(words, |u| operator_laws_hold(u, n).err())
            .into_iter()
            .flatten()
            .collect();
        ensure(failures.is_empty(), || failures[0].clone())?;
    }
    Ok(format!("{} words", small.len() + random.len()))
}

/// Words reachable from `u` by rewriting one factor with a defining relation.
fn relation_neighbours(u: &Word, relations: &[(Word, Word)]) -> Vec<Word> {
    let s = u.symbols();
    let mut out = Vec::new();
    for (l, r) in relations {
        for (from, to) in [(l, r), (r, l)] {
            let k = from.len();
            if k > s.len() {
                continue;
            }
            for start in 0..=s.len() - k {
                if &s[start..start + k] == from.symbols() {
                    let mut v = s.to_vec();
                    v[start..start + k].copy_from_slice(to.symbols());
                    out.push(Word::new(v).expect("positive symbols"));
                }
            }
        }
    }
    out
}

fn presentation(exec: Execution) -> Outcome {
    let relations = hypoplactic_relations(3);
    for (l, r) in relations.pairs() {
        ensure(hypo_congruent(l, r), || {
            format!("relation {l} = {r} not congruent")
        })?;
    }
    let classes = weight_classes(all_words_up_to(3, 4));
    let bad = exec.find_failure(&classes, |class| {
        let mut seen: HashSet<&Word> = HashSet::new();
        let members: HashSet<&Word> = class.iter().collect();
        for u in class {
            if seen.contains(u) {
                continue;
            }
            let mut block: HashSet<Word> = HashSet::from([u.clone()]);
            let mut queue = VecDeque::from([u.clone()]);
            while let Some(x) = queue.pop_front() {
                for y in relation_neighbours(&x, relations.pairs()) {
                    if block.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
            let t = hypo_rsk(u).0;
            let by_tableau: HashSet<Word> = class
                .iter()
                .filter(|v| hypo_rsk(v).0 == t)
                .cloned()
                .collect();
            if block != by_tableau {
                return false;
            }
            seen.extend(members.iter().copied().filter(|v| block.contains(*v)));
        }
        true
    });
    ensure(bad.is_none(), || {
        format!(
            "closure differs in class of {:?}",
            bad.map(|k| &classes[k][0])
        )
    })?;
    Ok(format!("{} relations", relations.len()))
}

fn identity(exec: Execution) -> Outcome {
    let words = all_words_up_to(3, 3);
    let bad = exec.find_failure(&words, |x| {
        words
            .iter()
            .all(|y| check_identity_xyxy(x, y, 3).unwrap_or(false))
    });
    ensure(bad.is_none(), || {
        format!("fails for x = {:?}", bad.map(|k| &words[k]))
    })?;
    Ok(format!("{} pairs", words.len() * words.len()))
}

fn structure(exec: Execution) -> Outcome {
    let overlay = crystal_overlay(&w("2111"), 4).map_err(|e| e.to_string())?;
    let mut roots: Vec<String> = overlay
        .quasi_roots()
        .iter()
        .map(|r| r.to_string())
        .collect();
    roots.sort();
    ensure(roots == ["2111", "2112", "2122"], || {
        format!("quasi-components rooted at {roots:?}")
    })?;

    let words = all_words_up_to(3, 4);
    let crystal =
        ComponentAtlas::build(&words, 3, GraphKind::Crystal, exec).map_err(|e| e.to_string())?;
    let quasi = ComponentAtlas::build(&words, 3, GraphKind::QuasiCrystal, exec)
        .map_err(|e| e.to_string())?;
    let bad = exec.find_failure(crystal.components(), |c| {
        let qr_parts: HashSet<usize> = c
            .vertices()
            .iter()
            .filter(|v| is_quasi_ribbon_word(v))
            .filter_map(|v| quasi.locate(v).map(|(k, _)| k))
            .collect();
        qr_parts.len() <= 1
    });
    ensure(bad.is_none(), || {
        "a crystal component has two quasi-ribbon quasi-components".into()
    })?;
    let bad = exec.find_failure(quasi.components(), |c| {
        involution_edge_check(c, 3).unwrap_or(false)
    });
    ensure(bad.is_none(), || "edge reversal fails".into())?;
    Ok(format!(
        "{} crystal and {} quasi-crystal components",
        crystal.components().len(),
        quasi.components().len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        for id in [1, 8, 11] {
            let report = run(id, Execution::Sequential);
            assert!(report.passed, "{report}");
        }
        assert!(!run(13, Execution::Sequential).passed);
    }

    #[test]
    fn relation_rewriting() {
        let rel = vec![(w("121"), w("211"))];
        let mut got = relation_neighbours(&w("1211"), &rel);
        got.sort();
        assert_eq!(got, vec![w("1121"), w("2111")]);
    }

    #[test]
    fn random_words_are_reproducible() {
        assert_eq!(random_words(7, 20, 5, 8), random_words(7, 20, 5, 8));
        assert!(random_words(7, 200, 5, 8)
            .iter()
            .all(|u| u.len() <= 8 && u.check_bound(5).is_ok()));
    }

    #[test]
    fn report_format() {
        let r = CheckReport {
            id: 3,
            name: CRITERIA[2],
            passed: true,
            detail: "ok".into(),
        };
        assert_eq!(
            r.to_string(),
            "PASS [ 3] tableau count matches enumeration and component size: ok"
        );
    }
}
