use proptest::prelude::*;

use bwlab::bw_solvers::{bandwidth_brute, bandwidth_decide_dp};
use bwlab::codec::{decode_graph, decode_layout, decode_map, decode_wpe, encode_graph, encode_layout, encode_map, encode_wpe, encode_wpe_compact};
use bwlab::formula::{Element, Formula};
use bwlab::graph::{bandwidth_of_layout, Graph, Layout};
use bwlab::sat2wpe::{build_emulation_witness, build_wpe_instance, fold_path, FoldDirection, Role, VarRole, Variant};
use bwlab::wpe::{check_uniform_emulation, solve_wpe_brute, solve_wpe_dp, EmulationMap, End, Pins, WpeInstance};
use bwlab::SearchLimits;

fn end() -> impl Strategy<Value = Option<End>> {
    prop_oneof![Just(None), Just(Some(End::One)), Just(Some(End::M))]
}

/// Instances with `N <= 7`, `M <= 4`, weights at most 3.
fn instance() -> impl Strategy<Value = WpeInstance> {
    (prop::collection::vec(1u64..=3, 1..=7), 1u64..=4, end(), end()).prop_filter_map("M must divide the weight", |(w, m, first, last)| {
        let total: u64 = w.iter().sum();
        (total % m == 0).then(|| WpeInstance::new(&w, m, total / m, Pins { first, last }).unwrap())
    })
}

fn valid(inst: &WpeInstance, f: &EmulationMap) -> bool {
    check_uniform_emulation(inst, f).map(|r| r.is_valid()).unwrap_or(false)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_matches_brute(inst in instance()) {
        let lim = SearchLimits::default();
        let b = solve_wpe_brute(&inst, lim).unwrap();
        let d = solve_wpe_dp(&inst, lim).unwrap();
        prop_assert_eq!(b.is_some(), d.is_some());
        for f in b.iter().chain(d.iter()) {
            prop_assert!(valid(&inst, f));
        }
    }

    #[test]
    fn mirroring_preserves_solvability(inst in instance()) {
        let lim = SearchLimits::default();
        let b = solve_wpe_brute(&inst, lim).unwrap();
        let mirrored = inst.mirrored();
        prop_assert_eq!(b.is_some(), solve_wpe_brute(&mirrored, lim).unwrap().is_some());
        if let Some(f) = b {
            prop_assert!(valid(&mirrored, &f.mirrored(inst.m())));
        }
    }

    #[test]
    fn scaling_preserves_solvability(inst in instance(), factor in 2u64..=7) {
        let lim = SearchLimits::default();
        let scaled = inst.scaled(factor).unwrap();
        let a = solve_wpe_brute(&inst, lim).unwrap();
        let b = solve_wpe_brute(&scaled, lim).unwrap();
        prop_assert_eq!(&a, &b);
    }

    #[test]
    fn folds_step_by_at_most_one(i in 1u64..30, j in 1u64..30, extra in 0u64..12, right in any::<bool>()) {
        let gamma = i.abs_diff(j).saturating_sub(1) + extra;
        let dir = if right { FoldDirection::Right } else { FoldDirection::Left };
        match fold_path(i, j, gamma, dir) {
            Ok(ps) => {
                prop_assert_eq!(ps.len() as u64, gamma);
                let mut walk = vec![i];
                walk.extend(&ps);
                walk.push(j);
                for w in walk.windows(2) {
                    prop_assert!(w[0].abs_diff(w[1]) <= 1);
                }
                let (lo, hi) = (i.min(j), i.max(j));
                for &p in &ps {
                    let inside = if right { p >= lo } else { p <= hi };
                    prop_assert!(inside);
                    prop_assert!(ps.iter().filter(|&&q| q == p).count() <= 2 + usize::from(p == i || p == j));
                }
            }
            Err(e) => prop_assert!(!right, "right fold failed: {}", e),
        }
    }

    #[test]
    fn too_short_folds_are_rejected(i in 1u64..30, gap in 2u64..30, upward in any::<bool>()) {
        let j = if upward { i + gap } else { i.saturating_sub(gap).max(1) };
        prop_assume!(i.abs_diff(j) >= 2);
        let gamma = i.abs_diff(j) - 2;
        prop_assert!(fold_path(i, j, gamma, FoldDirection::Right).is_err());
    }

    #[test]
    fn layout_mirror_keeps_bandwidth(g in graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut order: Vec<u32> = (0..n as u32).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let l = Layout::from_order(&order).unwrap();
        prop_assert_eq!(bandwidth_of_layout(&g, &l).unwrap(), bandwidth_of_layout(&g, &l.mirrored()).unwrap());
    }

    #[test]
    fn bandwidth_dp_matches_brute(g in graph(8), k in 0u64..=4) {
        let lim = SearchLimits::default();
        let (bw, l) = bandwidth_brute(&g, lim).unwrap();
        prop_assert_eq!(bandwidth_of_layout(&g, &l).unwrap(), bw);
        let d = bandwidth_decide_dp(&g, k, lim).unwrap();
        prop_assert_eq!(d.is_some(), bw <= k);
        if let Some(l) = d {
            prop_assert!(bandwidth_of_layout(&g, &l).unwrap() <= k);
        }
    }

    #[test]
    fn codecs_round_trip(inst in instance(), g in graph(7)) {
        prop_assert_eq!(&decode_wpe(&encode_wpe(&inst)).unwrap(), &inst);
        prop_assert_eq!(&decode_wpe(&encode_wpe_compact(&inst)).unwrap(), &inst);
        let f = EmulationMap::from_positions(&inst.weights().map(|w| w % inst.m() + 1).collect::<Vec<_>>());
        prop_assert_eq!(&decode_map(&encode_map(&f)).unwrap(), &f);
        prop_assert_eq!(decode_graph(&encode_graph(&g, None)).unwrap().0, g.clone());
        let l = Layout::identity(g.n()).mirrored();
        prop_assert_eq!(decode_layout(&encode_layout(&l)).unwrap(), l);
    }
}

fn cnf(n: u32, clauses: &[Vec<(u32, bool)>]) -> Formula {
    let or = |c: &Vec<(u32, bool)>| {
        let mut lits: Vec<(u32, bool)> = c.clone();
        lits.sort();
        lits.dedup();
        Element::Or(lits.into_iter().map(|(v, pos)| if pos { Element::Pos(v) } else { Element::Neg(v) }).collect())
    };
    Formula::new(Element::And(clauses.iter().map(or).collect()), n).unwrap()
}

fn clauses(n: u32) -> impl Strategy<Value = Vec<Vec<(u32, bool)>>> {
    prop::collection::vec(prop::collection::vec((1..=n, any::<bool>()), 1..=3), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// The heavy vertex closing each variable part lands on the column that
    /// names the variable chosen for that part.
    #[test]
    fn determining_columns_encode_the_assignment(n in 2u32..=4, k in 1u32..=2, cs in clauses(4)) {
        let cs: Vec<Vec<(u32, bool)>> = cs.into_iter().map(|c| c.into_iter().map(|(v, p)| ((v - 1) % n + 1, p)).collect()).collect();
        let f = cnf(n, &cs);
        prop_assume!(k <= n);
        let con = build_wpe_instance(&f, k, Variant::Free).unwrap();
        for a in f.weighted_solutions(k) {
            let map = build_emulation_witness(&con, &a).unwrap();
            prop_assert!(valid(&con.instance, &map));
            let chosen: Vec<u32> = a.vars().collect();
            let mut idx = 1;
            for (r, count) in &con.roles {
                if let Role::Var { part, sub: VarRole::Determining } = r {
                    let col = map.get(idx).unwrap();
                    prop_assert_eq!(col, (n + 1 + chosen[*part as usize - 1]) as u64);
                }
                idx += count;
            }
        }
    }

    #[test]
    fn every_variant_builds_a_valid_witness(n in 2u32..=3, cs in clauses(3), v in 0usize..5) {
        let cs: Vec<Vec<(u32, bool)>> = cs.into_iter().map(|c| c.into_iter().map(|(x, p)| ((x - 1) % n + 1, p)).collect()).collect();
        let f = cnf(n, &cs);
        let variant = Variant::ALL[v];
        let con = build_wpe_instance(&f, 1, variant).unwrap();
        prop_assert_eq!(con.instance.pins(), variant.pins());
        for a in f.weighted_solutions(1) {
            let map = build_emulation_witness(&con, &a).unwrap();
            prop_assert!(valid(&con.instance, &map));
        }
    }
}
