//! Named verification suites.  Each returns a report whose cases are in a
//! fixed order, so identical budgets give identical reports.

use std::collections::BTreeSet;
use std::time::Instant;

use girth5_core::catalog::{
    classify_exceptional, cylinder_instances, is_broken_chain, make_chain, make_exceptional, ChainEmbedding,
    ExceptionalClass,
};
use girth5_core::coloring::{basic_claim_checks, chromatic_bound, is_ring_critical, k_colorable, subsumes};
use girth5_core::cycles::{cycles_up_to, distances, girth};
use girth5_core::enumerate::{
    enumerate_basic_with, maximal_basic, two_triangle_shape, BatchMap, Found, Search, SearchSpec,
};
use girth5_core::props::{i0, i1, i2};
use girth5_core::regions::cycle_class;
use girth5_core::shortcycles::{bound6_edges, concentric_edges, near7_edges, near_ring_edges};
use girth5_core::weight::{
    build_cyl_table, check_disk_weight, check_s_properties, check_surfineq, eta_value, s_value, verify_cyl_table,
    CheckReport, CylTable,
};
use girth5_core::{EmbeddedGraph, Rational};
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::random::random_triangle_free_plane;
use crate::report::{Case, SuiteReport};

pub const SUITES: [&str; 12] = [
    "s-props",
    "surfineq",
    "cyl",
    "chains",
    "exceptional",
    "basic",
    "critshort",
    "planechar-small",
    "diskweight-small",
    "aksen-small",
    "grotzsch-random",
    "concentric",
];

pub const CYL_GOLDEN: &str = include_str!("../golden/cyl_table.json");
pub const ETA_GOLDEN: &str = include_str!("../golden/eta.json");

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (known: {list})", list = SUITES.join(", "))]
    Unknown(String),
    #[error("search failed: {0}")]
    Search(#[from] girth5_core::enumerate::EnumerateError),
}

/// Runs one suite, or every suite for `all`.
pub fn run(name: &str, budget: &Budget, mapper: &dyn BatchMap) -> Result<Vec<SuiteReport>, SuiteError> {
    if name == "all" {
        return SUITES.iter().map(|s| run_suite(s, budget, mapper)).collect();
    }
    Ok(vec![run_suite(name, budget, mapper)?])
}

pub fn run_suite(name: &str, budget: &Budget, mapper: &dyn BatchMap) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let mut cases = match name {
        "s-props" => s_props(budget),
        "surfineq" => surfineq(budget),
        "cyl" => cyl(budget),
        "chains" => chains(budget),
        "exceptional" => exceptional(budget),
        "basic" => basic(mapper)?,
        "critshort" => critshort(budget, mapper)?,
        "planechar-small" => planechar(budget, mapper)?,
        "diskweight-small" => diskweight(budget, mapper)?,
        "aksen-small" => aksen(budget, mapper)?,
        "grotzsch-random" => grotzsch(budget),
        "concentric" => concentric(),
        other => return Err(SuiteError::Unknown(other.into())),
    };
    if budget.inject_failure != 0 {
        cases.push(Case::check("injected", json!({}), "pass", "fail", false));
    }
    Ok(SuiteReport::new(name, cases, start.elapsed()))
}

fn rat(r: Rational) -> Value {
    json!([r.numer().to_string(), r.denom().to_string()])
}

/// One case per clause: every instance of it held.
fn clause_cases(prefix: &str, rep: &CheckReport, params: Value) -> Vec<Case> {
    rep.counts
        .iter()
        .map(|&(clause, n)| {
            let fails = rep.failures.iter().filter(|f| f.clause == clause).count();
            let mut p = params.clone();
            p["instances"] = json!(n);
            Case::new(format!("{prefix}/{clause}"), p, "0 failures", format!("{fails} failures"))
        })
        .collect()
}

// ---------------------------------------------------------------- weights

fn s_props(b: &Budget) -> Vec<Case> {
    let mut cases = Vec::new();
    for (l, num) in [(5, 4), (6, 72), (7, 540), (8, 2184)] {
        let v = s_value(l).expect("l >= 5");
        let want = Rational::new(num, 4113);
        cases.push(Case::new(format!("s({l})"), json!({ "l": l, "as_written": format!("{num}/4113") }), want, v));
    }
    let lmax = b.s_lmax as usize;
    let off: Vec<usize> = (9..=lmax).filter(|&l| s_value(l) != Ok(Rational::from_integer(l as i128 - 8))).collect();
    cases.push(Case::new("s(l)=l-8", json!({ "lmin": 9, "lmax": lmax }), "[]", format!("{off:?}")));
    cases.extend(clause_cases("s", &check_s_properties(lmax), json!({ "lmax": lmax })));
    cases
}

fn surfineq(b: &Budget) -> Vec<Case> {
    let (g, t) = (b.surf_gmax as usize, b.surf_tmax as usize);
    let mut cases = clause_cases("surfineq", &check_surfineq(g, t, false), json!({ "gmax": g, "tmax": t }));
    // negative control: clause (a) outside its hypothesis must fail somewhere
    let control = check_surfineq(g, t, true);
    cases.push(Case::check(
        "surfineq/control",
        json!({ "gmax": g, "tmax": t }),
        "failures",
        format!("{} failures", control.failures.len()),
        !control.ok(),
    ));
    cases
}

pub fn cyl_table_json(t: &CylTable) -> String {
    let n = t.xmax + 1;
    let rows: Vec<Value> = (0..n).map(|x| Value::Array((0..n).map(|y| rat(t.get(x, y))).collect())).collect();
    serde_json::to_string_pretty(&json!({ "xmax": t.xmax, "cyl": rows })).unwrap() + "\n"
}

pub fn eta_json(t: &CylTable) -> String {
    serde_json::to_string_pretty(&json!({ "cyl_7_7": rat(t.get(7, 7)), "eta": rat(eta_value(t)) })).unwrap() + "\n"
}

fn cyl(b: &Budget) -> Vec<Case> {
    let xmax = b.cyl_xmax as usize;
    let p = json!({ "xmax": xmax });
    let t = match build_cyl_table(xmax) {
        Ok(t) => t,
        Err(e) => return vec![Case::new("fixpoint", p, "table", e)],
    };
    let mut cases = vec![Case::new("fixpoint", p.clone(), "table", "table")];
    let rep = verify_cyl_table(&t);
    // cyl(0,0) = 0 contradicts the s(x+y+11) bound there; that single
    // instance is the only permitted failure.
    let unexpected: Vec<String> = rep
        .failures
        .iter()
        .filter(|f| !(f.clause == "s(x+y+11)" && f.params == [0, 0]))
        .map(|f| format!("{} {:?}", f.clause, f.params))
        .collect();
    cases.push(Case::new("reverify", json!({ "xmax": xmax, "instances": rep.total() }), "[]", format!("{unexpected:?}")));
    let sym = (0..=xmax).all(|x| (0..=xmax).all(|y| t.get(x, y) == t.get(y, x)));
    cases.push(Case::new("symmetric", p.clone(), true, sym));
    let mono = (0..=xmax).all(|x| (1..=xmax).all(|y| t.get(x, y - 1) <= t.get(x, y)));
    cases.push(Case::new("nondecreasing", p.clone(), true, mono));
    cases.push(Case::new("cyl(0,0)", p.clone(), "0", t.get(0, 0)));
    cases.push(Case::check("cyl(4,4)>=886", p.clone(), ">= 886", t.get(4, 4), t.get(4, 4) >= Rational::from_integer(886)));
    let eta = eta_value(&t);
    let s5 = s_value(5).unwrap();
    let direct = Rational::from_integer(1867) + Rational::from_integer(67) * t.get(7, 7) / s5;
    cases.push(Case::new("eta", p.clone(), direct, eta));
    if xmax == 12 {
        for (id, golden, now) in [("golden/cyl_table", CYL_GOLDEN, cyl_table_json(&t)), ("golden/eta", ETA_GOLDEN, eta_json(&t))] {
            let same = golden.trim() == now.trim();
            cases.push(Case::new(id, p.clone(), "matches", if same { "matches" } else { "differs" }));
        }
    }
    cases
}

// ---------------------------------------------------------------- catalog

/// Calls `f` on every proper 3-coloring of the graph.
pub fn for_each_coloring(adj: &[Vec<usize>], f: &mut dyn FnMut(&[u8])) {
    fn rec(v: usize, adj: &[Vec<usize>], col: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if v == adj.len() {
            f(col);
            return;
        }
        for c in 0..3 {
            if adj[v].iter().all(|&w| w >= v || col[w] != c) {
                col.push(c);
                rec(v + 1, adj, col, f);
                col.pop();
            }
        }
    }
    rec(0, adj, &mut Vec::with_capacity(adj.len()), f);
}

/// Number of 3-colorings and the number violating the chain's pair rule.
fn propagation(g: &EmbeddedGraph, a: [usize; 2], c: [usize; 2]) -> (usize, usize) {
    let (mut total, mut bad) = (0, 0);
    for_each_coloring(&g.adjacency(), &mut |col| {
        total += 1;
        if col[a[0]] != col[a[1]] && col[c[0]] == col[c[1]] {
            bad += 1;
        }
    });
    (total, bad)
}

fn no_contractible_short(g: &EmbeddedGraph) -> bool {
    cycles_up_to(&g.adjacency(), 4).iter().all(|c| !cycle_class(g, c).map_or(true, |cl| cl.is_contractible()))
}

fn chains(b: &Budget) -> Vec<Case> {
    let mut cases = Vec::new();
    for k in 0..=b.chain_kmax as usize {
        let p = json!({ "k": k });
        let g = make_chain(k, ChainEmbedding::Abstract).expect("plane chain").graph;
        cases.push(Case::new(format!("chain-{k}/planar"), p.clone(), "(0, true)", format!("{:?}", g.euler_genus())));
        let chi = (chromatic_bound(&g, 3), chromatic_bound(&g, 4));
        cases.push(Case::new(format!("chain-{k}/4-chromatic"), p.clone(), "(Ok(false), Ok(true))", format!("{chi:?}")));
        let tri = cycles_up_to(&g.adjacency(), 3).len();
        cases.push(Case::new(format!("chain-{k}/triangles"), p.clone(), 4, tri));
        let odd: Vec<usize> = g.faces().iter().map(|f| f.length).filter(|&l| l != 3 && l != 5).collect();
        cases.push(Case::new(format!("chain-{k}/other-faces-5"), p.clone(), "[]", format!("{odd:?}")));
        let kg = make_chain(k, ChainEmbedding::CanonicalKlein).expect("Klein chain").graph;
        cases.push(Case::new(format!("klein-{k}/genus"), p.clone(), "(2, false)", format!("{:?}", kg.euler_genus())));
        cases.push(Case::new(format!("klein-{k}/no-contractible-short"), p.clone(), true, no_contractible_short(&kg)));
        if k >= 2 {
            let c = make_chain(k, ChainEmbedding::BrokenCylinder).expect("k >= 2");
            let (total, bad) = propagation(&c.graph, c.first_pair, c.last_pair);
            cases.push(Case::check(
                format!("broken-{k}/propagation"),
                json!({ "k": k, "colorings": total }),
                "0 violations",
                format!("{bad} violations"),
                bad == 0 && total > 0,
            ));
            cases.push(Case::new(format!("broken-{k}/recognised"), p.clone(), format!("Some({k})"), format!("{:?}", is_broken_chain(&c.graph))));
            if k <= b.broken_kmax as usize {
                cases.push(Case::new(format!("broken-{k}/critical"), p, true, is_ring_critical(&c.graph).critical));
            }
        }
    }
    cases
}

fn exceptional(b: &Budget) -> Vec<Case> {
    let mut cases = Vec::new();
    for class in ExceptionalClass::ALL {
        for l in class.min_length()..=b.exceptional_lmax as usize {
            let got = make_exceptional(class, l, None).map_err(|e| e.to_string()).and_then(|g| classify_exceptional(&g).map_err(|e| e.to_string()));
            cases.push(Case::new(format!("{class:?}-{l}"), json!({ "class": format!("{class:?}"), "l": l }), format!("Ok({class:?})"), format!("{got:?}")));
        }
    }
    cases
}

fn concentric() -> Vec<Case> {
    let mut cases = Vec::new();
    for inst in cylinder_instances() {
        let g = &inst.graph;
        let r = inst.ring;
        let k0 = inst.k0.len();
        let p = json!({ "instance": inst.name, "ring": r, "k0": k0 });
        let mut bound = |what: &str, got: Result<Vec<usize>, String>, limit: usize| match got {
            Ok(es) => cases.push(Case::check(
                format!("{}/{what}", inst.name),
                p.clone(),
                format!("<= {limit}"),
                es.len(),
                es.len() <= limit,
            )),
            Err(e) => cases.push(Case::check(format!("{}/{what}", inst.name), p.clone(), format!("<= {limit}"), e, false)),
        };
        bound("concentric", concentric_edges(g, r, &inst.k0).map_err(|e| e.to_string()), 10 * k0);
        match g.rings()[r].size() {
            4 => bound("near4", near_ring_edges(g, r).map_err(|e| e.to_string()), 93),
            6 => bound("bound6", bound6_edges(g, r).map_err(|e| e.to_string()), 346),
            7 => bound("near7", near7_edges(g, r).map_err(|e| e.to_string()), 35),
            _ => {}
        }
    }
    cases
}

// -------------------------------------------------------------- searches

fn search(spec: SearchSpec, b: &Budget, mapper: &dyn BatchMap) -> Result<(Vec<Found>, usize), SuiteError> {
    let mut spec = spec;
    spec.max_states = b.max_states as usize;
    let out = Search::new(spec)?.run(mapper)?;
    Ok((out.found, out.states))
}

fn internal_vertices(g: &EmbeddedGraph) -> Vec<usize> {
    let ring = g.ring_of_vertex();
    (0..g.n_vertices()).filter(|&v| ring[v].is_none()).collect()
}

/// Which outcome of the plane characterisation a disk graph matches:
/// 'a' a tree on at most |R|−8 vertices, 'b' a connected unicyclic graph on
/// at most |R|−5 vertices whose cycle is a 5-cycle, 'c' |R| = 12 with every
/// second ring vertex of degree two on a facial 5-cycle.
pub fn planechar_case(g: &EmbeddedGraph) -> Option<char> {
    let l = g.rings()[0].size();
    let inner = internal_vertices(g);
    let index = |v: usize| inner.iter().position(|&w| w == v);
    let adj: Vec<Vec<usize>> =
        inner.iter().map(|&v| g.neighbors(v).filter_map(index).collect()).collect();
    let edges = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    let connected = !inner.is_empty() && distances(&adj, &[0]).iter().all(|&d| d != usize::MAX);
    if l >= 9 && connected && edges + 1 == inner.len() && inner.len() + 8 <= l {
        return Some('a');
    }
    if l >= 10 && connected && edges == inner.len() && inner.len() + 5 <= l && girth(&adj) == Some(5) {
        return Some('b');
    }
    if l == 12 {
        let ring = g.rings()[0].vertices();
        let on_pentagon = |v: usize| {
            g.faces().iter().any(|f| f.length == 5 && f.walks.iter().any(|w| w.states.iter().any(|s| g.tail(s.dart) == v)))
        };
        for parity in 0..2 {
            if ring.iter().skip(parity).step_by(2).all(|&v| g.degree(v) == 2 && on_pentagon(v)) {
                return Some('c');
            }
        }
    }
    None
}

fn certified(g: &EmbeddedGraph) -> bool {
    is_ring_critical(g).critical && i0(g) && i1(g) && i2(g)
}

fn disk_runs(b: &Budget, mapper: &dyn BatchMap) -> Result<Vec<(usize, Vec<Found>, usize)>, SuiteError> {
    (5..=b.disk_lmax as usize)
        .map(|l| search(SearchSpec::disk(l, b.disk_internal as usize), b, mapper).map(|(f, s)| (l, f, s)))
        .collect()
}

fn planechar(b: &Budget, mapper: &dyn BatchMap) -> Result<Vec<Case>, SuiteError> {
    let n = b.disk_internal as usize;
    let mut cases = Vec::new();
    for (l, found, states) in disk_runs(b, mapper)? {
        let p = json!({ "ring": l, "internal": n, "states": states, "found": found.len() });
        if l <= 8 {
            cases.push(Case::new(format!("disk-{l}/none"), p, 0, found.len()));
            continue;
        }
        if l == 9 {
            let sizes: BTreeSet<usize> = found.iter().map(|f| internal_vertices(&f.graph).len()).collect();
            cases.push(Case::check("disk-9/one-vertex-tree", p.clone(), "{1}", format!("{sizes:?}"), sizes == BTreeSet::from([1])));
        }
        for (i, f) in found.iter().enumerate() {
            let q = json!({ "ring": l, "index": i, "vertices": f.graph.n_vertices(), "edges": f.graph.n_edges() });
            let case = planechar_case(&f.graph);
            let (expected, ok) = if l == 9 { ("Some('a')", case == Some('a')) } else { ("a, b or c", case.is_some()) };
            cases.push(Case::check(format!("disk-{l}/{i}/outcome"), q.clone(), expected, format!("{case:?}"), ok));
            cases.push(Case::new(format!("disk-{l}/{i}/certified"), q, true, certified(&f.graph)));
        }
    }
    Ok(cases)
}

fn diskweight(b: &Budget, mapper: &dyn BatchMap) -> Result<Vec<Case>, SuiteError> {
    let mut cases = Vec::new();
    let mut check = |id: String, g: &EmbeddedGraph| {
        let q = json!({ "ring": g.rings()[0].size(), "vertices": g.n_vertices() });
        match check_disk_weight(g) {
            Ok(c) => {
                let bullets: Vec<String> = c
                    .bullets
                    .iter()
                    .map(|x| match (x.applies, x.ok) {
                        (false, _) => "n/a".to_string(),
                        (true, true) => "ok".to_string(),
                        (true, false) => "FAIL".to_string(),
                    })
                    .collect();
                cases.push(Case::check(id, q, "no FAIL", format!("{:?} w={} {bullets:?}", c.class, c.weight), c.ok()));
            }
            Err(e) => cases.push(Case::check(id, q, "no FAIL", e, false)),
        }
    };
    for (l, found, _) in disk_runs(b, mapper)? {
        if l > 10 {
            continue;
        }
        for (i, f) in found.iter().enumerate() {
            check(format!("disk-{l}/{i}"), &f.graph);
        }
    }
    for class in ExceptionalClass::ALL {
        for l in class.min_length()..=10 {
            if let Ok(g) = make_exceptional(class, l, None) {
                if is_ring_critical(&g).critical {
                    check(format!("{class:?}-{l}"), &g);
                }
            }
        }
    }
    Ok(cases)
}

fn critshort(b: &Budget, mapper: &dyn BatchMap) -> Result<Vec<Case>, SuiteError> {
    let n = b.critshort_internal as usize;
    let (found, states) = search(SearchSpec::cylinder(3, 3, n), b, mapper)?;
    let p = json!({ "rings": [3, 3], "internal": n, "states": states, "found": found.len() });
    let shapes: Vec<Option<u8>> = found.iter().map(|f| two_triangle_shape(&f.graph)).collect();
    let set: BTreeSet<Option<u8>> = shapes.iter().copied().collect();
    Ok(vec![
        Case::new("shapes", p.clone(), "{Some(1), Some(2), Some(3)}", format!("{set:?}")),
        Case::new("one-per-shape", p, 3, found.len()),
    ])
}

fn aksen(b: &Budget, mapper: &dyn BatchMap) -> Result<Vec<Case>, SuiteError> {
    let mut cases = Vec::new();
    for l in [3, 4] {
        let n = (b.aksen_vertices as usize).saturating_sub(l);
        let (found, states) = search(SearchSpec::one_ring_cylinder(l, n), b, mapper)?;
        cases.push(Case::new(
            format!("one-ring-{l}"),
            json!({ "ring": l, "max_vertices": b.aksen_vertices, "states": states }),
            0,
            found.len(),
        ));
    }
    Ok(cases)
}

fn basic(mapper: &dyn BatchMap) -> Result<Vec<Case>, SuiteError> {
    let list = enumerate_basic_with(false, mapper)?;
    let wide = enumerate_basic_with(true, mapper)?;
    let max = maximal_basic(&list);
    let mut cases = vec![
        Case::new("maximal", json!({ "found": list.len() }), 5, max.len()),
        Case::check("triangles-enlarge", json!({ "without": list.len(), "with": wide.len() }), "larger", wide.len(), wide.len() > list.len()),
    ];
    for (i, f) in list.iter().enumerate() {
        let g = &f.graph;
        let p = json!({ "index": i, "vertices": g.n_vertices(), "edges": g.n_edges() });
        if girth5_core::cycles::is_two_connected(&g.adjacency()) && girth(&g.adjacency()).is_none_or(|x| x > 3) {
            let holds = basic_claim_checks(g).map(|c| [c[0].holds(), c[1].holds()]);
            cases.push(Case::new(format!("{i}/claims"), p.clone(), "Ok([true, true])", format!("{holds:?}")));
        }
        // no other output with the same rings is equivalent to this one
        let twins: Vec<usize> = list
            .iter()
            .enumerate()
            .filter(|&(j, h)| {
                j != i && subsumes(&h.graph, g).unwrap_or(false) && subsumes(g, &h.graph).unwrap_or(false)
            })
            .map(|(j, _)| j)
            .collect();
        cases.push(Case::new(format!("{i}/minimal"), p, "[]", format!("{twins:?}")));
    }
    Ok(cases)
}

fn grotzsch(b: &Budget) -> Vec<Case> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(b.seed);
    let n = b.grotzsch_n as usize;
    (0..b.grotzsch_trials)
        .map(|t| {
            let seed: u64 = rng.gen();
            let g = random_triangle_free_plane(n, seed);
            let edges: Vec<[usize; 2]> = (0..g.n_edges()).map(|e| g.endpoints(e)).collect();
            let planar = g.euler_genus() == (0, true);
            let tri_free = girth(&g.adjacency()).is_none_or(|x| x >= 4);
            let col = k_colorable(g.n_vertices(), &edges, 3);
            Case::check(
                format!("trial-{t}"),
                json!({ "seed": seed, "n": n, "edges": edges.len() }),
                "planar, triangle-free, 3-colorable",
                format!("planar={planar} triangle-free={tri_free} colorable={col:?}"),
                planar && tri_free && col == Ok(true),
            )
        })
        .collect()
}
