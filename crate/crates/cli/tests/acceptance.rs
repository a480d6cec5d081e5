//! Acceptance suite. One line per criterion, `PASS` or `FAIL`, with the
//! tolerance and time limit it was held to. Exits non-zero if any fail.
//!
//! Every tolerance is exact equality of integers; time limits are wall clock
//! for an optimized test build.

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use std::process::Command;
use std::time::{Duration, Instant};
use tilecount_cli::render::{cmd_render, Format, RenderRequest};
use tilecount_cli::sequence::{cmd_sequence, SequenceRequest};
use tilecount_core::arith::{divisors, euler_phi, flip_solutions, minimal_order};
use tilecount_core::count::{
    breakdown, count, fxpt_rect_grid, fxpt_rect_torus, fxpt_square_grid, fxpt_square_torus,
    CountRequest,
};
use tilecount_core::group::{group_elements, subgroup_classes};
use tilecount_core::oracle::{
    count_orbits_direct, count_orbits_with, fixed_count_direct, fixed_count_orbit_formula,
    state_count, FixedCountPath, OracleBudget,
};
use tilecount_core::tileset::builtin;
use tilecount_core::{
    DihedralElement, FixedDesignTable, GridShape, OrbitSpec, Surface, SymmetryGroup, TileDesignSet,
};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

fn ambient(shape: &GridShape) -> SymmetryGroup {
    if shape.n == shape.m && shape.surface != Surface::Cylinder {
        SymmetryGroup::d8()
    } else {
        SymmetryGroup::d4()
    }
}

fn listed<S: AsRef<str>>(items: &[S]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items
            .iter()
            .map(|s| s.as_ref())
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

// ---------------------------------------------------------------------------

fn anchors() -> Outcome {
    let tr = builtin::truchet_diagonal();
    let t = tr.fixed_design_table();
    let budget = OracleBudget::default();
    let grid = GridShape::grid(2, 2).unwrap();
    let torus = GridShape::torus(2, 2).unwrap();
    let cases = [
        (
            "2x2 grid <id>",
            Surface::Grid,
            SymmetryGroup::trivial(),
            256u64,
        ),
        ("2x2 grid <r>", Surface::Grid, SymmetryGroup::c4(), 70),
        ("2x2 grid D8", Surface::Grid, SymmetryGroup::d8(), 43),
        ("2x2 torus D8", Surface::Torus, SymmetryGroup::d8(), 17),
    ];
    let mut bad = Vec::new();
    for (label, surface, r, want) in cases {
        let req = CountRequest::new(surface, 2, 2, r, &t).unwrap();
        let closed = count(&req).unwrap();
        let shape = if surface == Surface::Grid {
            grid
        } else {
            torus
        };
        let elems = group_elements(&shape, r).unwrap();
        let oracle = count_orbits_direct(&elems, &shape, &tr, &budget).unwrap();
        if closed != big(want) || oracle != big(want) {
            bad.push(format!(
                "{label}: closed {closed}, oracle {oracle}, want {want}"
            ));
        }
    }
    Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            "256, 70, 43, 17 from closed forms and oracle".into()
        } else {
            bad.join("; ")
        },
    )
}

/// Tile sets with at most four designs over `r`: single orbits plus built-ins.
fn small_tile_sets(r: SymmetryGroup) -> Vec<TileDesignSet> {
    let mut out: Vec<_> = OrbitSpec::single_orbit_catalog(r)
        .into_iter()
        .map(|s| s.realize())
        .filter(|ts| ts.len() <= 4)
        .collect();
    for ts in [builtin::two_color(), builtin::truchet_diagonal()] {
        if let Ok(ts) = ts.restrict(r) {
            out.push(ts);
        }
    }
    out
}

fn shapes_up_to_cells(max: usize) -> Vec<GridShape> {
    let mut out = Vec::new();
    for surface in Surface::ALL {
        for n in 1..=max {
            for m in 1..=max {
                if n * m <= max {
                    out.push(GridShape::new(n, m, surface).unwrap());
                }
            }
        }
    }
    out
}

fn strategy_identity() -> Outcome {
    let budget = OracleBudget::default();
    let mut comparisons = 0usize;
    let mut bad = Vec::new();
    for shape in shapes_up_to_cells(9) {
        let r = ambient(&shape);
        let elems = group_elements(&shape, r).unwrap();
        for ts in small_tile_sets(r) {
            for s in &elems {
                let direct = fixed_count_direct(s, &shape, &ts, &budget).unwrap();
                let orbits = fixed_count_orbit_formula(s, &shape, &ts).unwrap();
                comparisons += 1;
                if direct != orbits && bad.len() < 5 {
                    bad.push(format!(
                        "{shape} {s} |T|={}: {direct} vs {orbits}",
                        ts.len()
                    ));
                }
            }
        }
    }
    let ok = bad.is_empty() && comparisons >= 5000;
    Outcome::new(
        ok,
        format!(
            "{comparisons} element-level comparisons (need >= 5000); mismatches: {}",
            listed(&bad)
        ),
    )
}

fn closed_vs_oracle() -> Outcome {
    let budget = OracleBudget::default();
    let mut configs = 0usize;
    let mut direct = 0usize;
    let mut bad = Vec::new();
    for surface in Surface::ALL {
        for n in 1..=3 {
            for m in 1..=3 {
                let shape = GridShape::new(n, m, surface).unwrap();
                for r in ambient(&shape).subgroups() {
                    let elems = group_elements(&shape, r).unwrap();
                    for spec in OrbitSpec::single_orbit_catalog(r) {
                        let ts = spec.realize();
                        let req = CountRequest::new(surface, n, m, r, &spec.fixed_design_table())
                            .unwrap();
                        let closed = count(&req).unwrap();
                        let path = if state_count(&shape, ts.len()) <= 2_000_000 {
                            direct += 1;
                            FixedCountPath::Direct
                        } else {
                            FixedCountPath::OrbitFormula
                        };
                        let oracle = count_orbits_with(&elems, &shape, &ts, &budget, path).unwrap();
                        configs += 1;
                        if closed != oracle {
                            bad.push(format!("{shape} <{r}> {spec}: {closed} vs {oracle}"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{configs} configurations, {direct} by full enumeration, rest by orbit products; mismatches: {}",
            listed(&bad)
        ),
    )
}

fn random_spec(
    rng: &mut StdRng,
    r: SymmetryGroup,
    max_per_class: u64,
    min_orbits: u64,
) -> OrbitSpec {
    let classes = subgroup_classes(r);
    let mut counts: Vec<(SymmetryGroup, u64)> = Vec::new();
    while counts.iter().map(|c| c.1).sum::<u64>() < min_orbits {
        counts.clear();
        for c in &classes {
            if rng.gen_bool(0.5) {
                counts.push((c.representative, rng.gen_range(1..=max_per_class)));
            }
        }
    }
    OrbitSpec::new(r, &counts).unwrap()
}

fn integrality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let specs: Vec<OrbitSpec> = (0..20)
        .map(|_| random_spec(&mut rng, SymmetryGroup::d8(), 3, 2))
        .collect();
    let mut sums = 0usize;
    let mut bad = Vec::new();
    for spec in &specs {
        let table = spec.fixed_design_table();
        for surface in Surface::ALL {
            for n in 1..=12 {
                for m in 1..=12 {
                    let shape = GridShape::new(n, m, surface).unwrap();
                    for r in ambient(&shape).subgroups() {
                        let req = CountRequest::new(surface, n, m, r, &table).unwrap();
                        let sum: BigUint =
                            breakdown(&req).unwrap().into_iter().map(|(_, v)| v).sum();
                        sums += 1;
                        let divisible = (&sum % big(req.group_order())) == big(0);
                        if !divisible || count(&req).is_err() {
                            bad.push(format!("{shape} <{r}> {spec}"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{sums} Burnside sums over 20 multi-orbit specs; non-integral: {}",
            bad.len()
        ),
    )
}

/// An R-set with the given census built independently of `realize`: each
/// orbit uses a random conjugate of its stabilizer, and designs are shuffled.
fn scrambled(spec: &OrbitSpec, rng: &mut StdRng) -> TileDesignSet {
    let r = spec.group();
    let mut rows: Vec<Vec<u8>> = Vec::new(); // cosets per orbit
    for (class, &k) in spec.classes().iter().zip(spec.counts()) {
        for _ in 0..k {
            let s = *class.conjugates.choose(rng).unwrap();
            let mut cosets: Vec<u8> = Vec::new();
            for x in r.elements() {
                let mask = s.elements().fold(0u8, |acc, h| acc | 1 << h.mul(x).index());
                if !cosets.contains(&mask) {
                    cosets.push(mask);
                }
            }
            rows.push(cosets);
        }
    }
    let mut designs: Vec<(usize, u8)> = rows
        .iter()
        .enumerate()
        .flat_map(|(o, cs)| cs.iter().map(move |&c| (o, c)))
        .collect();
    designs.shuffle(rng);
    let times = |coset: u8, g: DihedralElement| -> u8 {
        DihedralElement::ALL
            .iter()
            .filter(|h| coset & (1 << h.index()) != 0)
            .fold(0u8, |acc, h| acc | 1 << h.mul(g).index())
    };
    let action: Vec<[usize; 8]> = designs
        .iter()
        .enumerate()
        .map(|(d, &(o, c))| {
            let mut row = [d; 8];
            for g in r.elements() {
                let image = (o, times(c, g));
                row[g.index()] = designs.iter().position(|&x| x == image).unwrap();
            }
            row
        })
        .collect();
    let names = (0..designs.len()).map(|i| format!("x{i}")).collect();
    TileDesignSet::from_table(r, names, action).unwrap()
}

fn tuple_lemma() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let budget = OracleBudget::default();
    let mut by_oracle = 0usize;
    let mut bad = Vec::new();
    for _ in 0..50 {
        let surface = Surface::ALL[rng.gen_range(0..3)];
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=3);
        let shape = GridShape::new(n, m, surface).unwrap();
        let subs = ambient(&shape).subgroups();
        let r = subs[rng.gen_range(0..subs.len())];
        let spec = random_spec(&mut rng, r, 1, 1);
        let a = scrambled(&spec, &mut rng);
        let b = scrambled(&spec, &mut rng);
        if a.classify_orbits() != spec || b.classify_orbits() != spec {
            bad.push(format!("census mismatch for {spec}"));
            continue;
        }
        let count_of = |ts: &TileDesignSet| {
            let req = CountRequest::new(surface, n, m, r, &ts.fixed_design_table()).unwrap();
            count(&req).unwrap()
        };
        let (ca, cb) = (count_of(&a), count_of(&b));
        let mut same = ca == cb;
        if state_count(&shape, a.len()) <= 1_000_000 {
            by_oracle += 1;
            let elems = group_elements(&shape, r).unwrap();
            let oa = count_orbits_direct(&elems, &shape, &a, &budget).unwrap();
            let ob = count_orbits_direct(&elems, &shape, &b, &budget).unwrap();
            same &= oa == ob && oa == ca;
        }
        if !same {
            bad.push(format!("{shape} <{r}> {spec}"));
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "50 configurations, {by_oracle} also by oracle; failures: {}",
            listed(&bad)
        ),
    )
}

fn specialization() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    let mut checks = 0usize;
    let mut bad = Vec::new();
    for family in ["grid", "torus"] {
        for _ in 0..10 {
            let values: Vec<_> = DihedralElement::ALL
                .iter()
                .map(|&g| (g, rng.gen_range(0..=9u64)))
                .collect();
            let t = FixedDesignTable::from_values(SymmetryGroup::d8(), &values);
            for n in 1..=8 {
                for g in SymmetryGroup::d4().elements() {
                    let (sq, rect) = if family == "grid" {
                        (fxpt_square_grid(g, n, &t), fxpt_rect_grid(g, n, n, &t))
                    } else {
                        (fxpt_square_torus(g, n, &t), fxpt_rect_torus(g, n, n, &t))
                    };
                    checks += 1;
                    if sq.unwrap() != rect.unwrap() {
                        bad.push(format!("{family} n={n} {g}"));
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{checks} square/rectangular pairs, n <= 8, 10 random tables per family; mismatches: {}", listed(&bad)),
    )
}

fn arith_lemmas() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=64usize {
        for a in 0..n {
            let search: Vec<usize> = (0..n).filter(|&x| (2 * x + 1 + a) % n == 0).collect();
            if flip_solutions(n, a).unwrap().solutions() != search.as_slice() {
                bad.push(format!("flip n={n} a={a}"));
            }
        }
        let ds = divisors(n).unwrap();
        let phi_sum: usize = ds.iter().map(|d| euler_phi(d).unwrap()).sum();
        if phi_sum != n {
            bad.push(format!("sum of phi over divisors of {n} is {phi_sum}"));
        }
        for d in ds.iter() {
            let with_order = (0..n)
                .filter(|&a| minimal_order(a, n).unwrap() == d)
                .count();
            if with_order != euler_phi(d).unwrap() {
                bad.push(format!("{with_order} shifts of order {d} mod {n}"));
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "flip equation and totient counts for n <= 64; failures: {}",
            listed(&bad)
        ),
    )
}

fn determinism() -> Outcome {
    let seq = SequenceRequest {
        surface: Surface::Torus,
        square: true,
        group: SymmetryGroup::d8(),
        tiles: "truchet-diagonal".into(),
        n_min: 1,
        n_max: 6,
        m: None,
        m_range: None,
        offset: None,
        transpose: false,
    };
    let render = RenderRequest {
        surface: Surface::Grid,
        n: 2,
        m: 2,
        group: SymmetryGroup::d8(),
        tiles: "truchet-diagonal".into(),
        format: Format::Svg,
        budget: OracleBudget::default(),
    };
    let mut bad = Vec::new();
    if cmd_sequence(&seq).unwrap() != cmd_sequence(&seq).unwrap() {
        bad.push("sequence in-process");
    }
    if cmd_render(&render).unwrap() != cmd_render(&render).unwrap() {
        bad.push("render in-process");
    }
    let bin = env!("CARGO_BIN_EXE_tilecount");
    let runs: [&[&str]; 3] = [
        &[
            "sequence",
            "--surface",
            "torus",
            "--square",
            "--group",
            "D8",
            "--tiles",
            "two-color",
            "--n-max",
            "6",
        ],
        &[
            "render",
            "--surface",
            "grid",
            "--n",
            "2",
            "--m",
            "2",
            "--group",
            "D8",
            "--tiles",
            "truchet-diagonal",
            "--format",
            "svg",
        ],
        &[
            "render",
            "--surface",
            "torus",
            "--n",
            "2",
            "--m",
            "2",
            "--group",
            "D8",
            "--tiles",
            "truchet-diagonal",
            "--format",
            "ascii",
        ],
    ];
    for args in runs {
        let once = || Command::new(bin).args(args).output().unwrap();
        let (a, b) = (once(), once());
        if !a.status.success() || a.stdout.is_empty() || a.stdout != b.stdout {
            bad.push(args[0]);
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "byte-identical repeated output, in-process and 3 binary runs; differing: {}",
            listed(&bad)
        ),
    )
}

fn main() {
    type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        (
            "AC1",
            "anchor values, exact",
            Duration::from_secs(1),
            anchors,
        ),
        (
            "AC2",
            "direct scan = orbit product, exact",
            Duration::from_secs(120),
            strategy_identity,
        ),
        (
            "AC3",
            "closed forms = oracle, n,m <= 3, exact",
            Duration::from_secs(300),
            closed_vs_oracle,
        ),
        (
            "AC4",
            "Burnside integrality, n,m <= 12, exact",
            Duration::from_secs(60),
            integrality,
        ),
        (
            "AC5",
            "census determines counts, exact",
            Duration::from_secs(120),
            tuple_lemma,
        ),
        (
            "AC6",
            "square formulas specialize, exact",
            Duration::from_secs(10),
            specialization,
        ),
        (
            "AC7",
            "arith lemmas, n <= 64, exact",
            Duration::from_secs(10),
            arith_lemmas,
        ),
        (
            "AC8",
            "determinism, byte-identical",
            Duration::from_secs(60),
            determinism,
        ),
    ];
    let mut failed = 0;
    for (id, title, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let ok = outcome.ok && took <= limit;
        if !ok {
            failed += 1;
        }
        println!(
            "{id} {title}: {} [{:.2}s, limit {}s] {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit.as_secs(),
            outcome.detail
        );
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
