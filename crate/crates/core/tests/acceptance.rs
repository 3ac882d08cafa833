//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{cycle_lengths, inv, mul, random_subgroups, raw, Raw};
use ordtype::burnside::{burnside_invariants, compare_invariants, table_of_marks, Verdict};
use ordtype::cli::{execute, resolve_builtin, CommandOutput, EXIT_NEGATIVE, EXIT_OK};
use ordtype::constructions::{identify_2_2, REFERENCE_ORDER_EQUATION};
use ordtype::spectrum::{compare_order_type, compare_two_orders, order_equation};
use ordtype::subgroups::{verify_cyclic_count_identity, SubgroupLattice};
use ordtype::Group;
use serde_json::{json, Value};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond { Ok(()) } else { Err(msg()) }
}

fn cli(args: &[&str]) -> CommandOutput {
    execute(std::iter::once("ordtype").chain(args.iter().copied()))
}

fn within(start: Instant, budget: Duration, what: &str) -> Check {
    let t = start.elapsed();
    ensure(t <= budget, || format!("{what} took {t:.2?}, budget {budget:?}"))
}

fn reference_counts() -> Value {
    let map: serde_json::Map<String, Value> =
        REFERENCE_ORDER_EQUATION.iter().map(|&(n, c)| (n.to_string(), json!(c))).collect();
    Value::Object(map)
}

const BUILTINS: [&str; 19] = [
    "C6", "C12", "S3", "S4", "S5", "S6", "A4", "A5", "A6", "A7", "D8", "D10", "D12", "Q8", "PSL3_4", "2_4_A7",
    "L3_4_2_2", "A5xA5xA5", "C30xC30xC30xC2xC2xC2",
];

struct Corpus {
    groups: Vec<(String, Group)>,
}

impl Corpus {
    fn build() -> Self {
        let mut groups: Vec<(String, Group)> =
            BUILTINS.iter().map(|n| (n.to_string(), resolve_builtin(n, None).expect("builtin"))).collect();
        for (i, g) in random_subgroups(6, 20, 0x5eed_0006).into_iter().enumerate() {
            groups.push((format!("random S6 #{i}"), g));
        }
        for (i, g) in random_subgroups(7, 20, 0x5eed_0007).into_iter().enumerate() {
            groups.push((format!("random S7 #{i}"), g));
        }
        Corpus { groups }
    }

    fn small(&self) -> impl Iterator<Item = &(String, Group)> {
        self.groups.iter().filter(|(_, g)| g.order() <= 500)
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let out = cli(&["order-eq", "--builtin", "2_4_A7"]);
    ensure(out.exit_code == EXIT_OK, || format!("exit {}", out.exit_code))?;
    let r = &out.report.results;
    ensure(r["counts"] == reference_counts(), || format!("counts {}", r["counts"]))?;
    ensure(r["total"] == json!(40320), || format!("total {}", r["total"]))?;
    within(start, Duration::from_secs(10), "order-eq")
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let id = identify_2_2().map_err(|e| e.to_string())?;
    let reference = ordtype::constructions::reference_order_equation();
    let matching: Vec<_> = id.candidates.iter().filter(|(_, eq)| *eq == reference).map(|(v, _)| *v).collect();
    ensure(id.candidates.len() == 3, || format!("{} candidates", id.candidates.len()))?;
    ensure(matching == vec![id.variant], || format!("matching variants {matching:?}, selected {}", id.variant))?;
    ensure(id.group.degree() == 42, || format!("degree {}", id.group.degree()))?;
    let eq = order_equation(&id.group).map_err(|e| e.to_string())?;
    ensure(eq == reference, || format!("selected equation {}", eq.equation_string()))?;
    println!("    selected variant {}", id.variant);
    within(start, Duration::from_secs(60), "identification")
}

fn criterion_3(cache: &str) -> Check {
    let start = Instant::now();
    let out = cli(&["order-type", "--builtin", "2_4_A7", "--builtin", "L3_4_2_2", "--cache-dir", cache]);
    ensure(out.exit_code == EXIT_OK, || format!("exit {}: {}", out.exit_code, out.text))?;
    ensure(out.report.results["equal"] == json!(true), || out.text.clone())?;
    within(start, Duration::from_secs(30), "order-type")
}

fn criterion_4(cache: &str) -> Check {
    let start = Instant::now();
    let out = cli(&["find-subgroup", "--builtin", "2_4_A7", "--order", "1152", "--cache-dir", cache]);
    let r = &out.report.results;
    ensure(out.exit_code == EXIT_OK && r["found"] == json!(true), || format!("2^4:A7: {}", out.text))?;
    ensure(r["is_solvable"] == json!(true), || "found subgroup is not solvable".into())?;
    within(start, Duration::from_secs(60), "positive find")?;
    // Independent check of the witness: closure order and membership.
    let g = resolve_builtin("2_4_A7", None).map_err(|e| e.to_string())?;
    let members: HashSet<Raw> = g.enumerate().unwrap().iter().map(raw).collect();
    let gens: Vec<Raw> = r["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| raw(&ordtype::parse_cycles(s.as_str().unwrap(), 16).unwrap()))
        .collect();
    ensure(gens.iter().all(|x| members.contains(x)), || "witness generator outside the group".into())?;
    let size = common::closure(16, &gens).len();
    ensure(size == 1152, || format!("witness generates {size} elements"))?;
    println!("    2^4:A7: solvable subgroup of order 1152 found in {:.2?}", start.elapsed());

    let start = Instant::now();
    let out = cli(&["find-subgroup", "--builtin", "L3_4_2_2", "--order", "1152", "--cache-dir", cache]);
    let r = &out.report.results;
    ensure(out.exit_code == EXIT_OK && r["found"] == json!(false), || format!("L3(4):2_2: {}", out.text))?;
    let cert = &r["certificate"];
    ensure(cert["found"] == json!(false) && cert["sylow_order"] == json!(128), || format!("certificate {cert}"))?;
    within(start, Duration::from_secs(15 * 60), "NONE search")?;
    println!(
        "    L3(4):2_2: NONE in {:.2?}; closures per level {}, outcomes {}",
        start.elapsed(),
        cert["closures_per_level"],
        cert["closure_orders"]
    );

    let out = cli(&["burnside-check", "--builtin", "L3_4_2_2", "--builtin", "2_4_A7", "--probe", "1152"]);
    ensure(out.exit_code == EXIT_NEGATIVE, || format!("burnside-check exit {}", out.exit_code))?;
    ensure(out.report.results["verdict"] == json!("OBSTRUCTED"), || out.text.clone())?;
    let probe = json!({"check": "solvable_probe", "m": 1152, "a": "absent", "b": "present"});
    let witnesses = out.report.results["witnesses"].as_array().unwrap();
    ensure(witnesses.contains(&probe), || format!("no order-1152 probe witness: {}", out.text))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let (a, b) = ("A5xA5xA5", "C30xC30xC30xC2xC2xC2");
    for name in [a, b] {
        let out = cli(&["spectrum", "--builtin", name]);
        let r = &out.report.results;
        ensure(r["order"] == json!(216000), || format!("{name} order {}", r["order"]))?;
        ensure(r["spectrum"] == json!([1, 2, 3, 5, 6, 10, 15, 30]), || format!("{name} spectrum {}", r["spectrum"]))?;
    }
    let out = cli(&["two-orders", "--builtin", a, "--builtin", b]);
    ensure(out.exit_code == EXIT_OK && out.report.results["equal"] == json!(true), || out.text.clone())?;
    let out = cli(&["order-type", "--builtin", a, "--builtin", b]);
    ensure(out.exit_code == EXIT_NEGATIVE, || format!("order-type exit {}", out.exit_code))?;
    let w = &out.report.results["witnesses"][0];
    ensure(*w == json!({"kind": "order_type", "d": 2, "count_a": 4096, "count_b": 64}), || format!("witness {w}"))?;
    let ga = resolve_builtin(a, None).unwrap();
    let gb = resolve_builtin(b, None).unwrap();
    ensure(!ga.is_solvable().unwrap(), || "A5^3 reported solvable".into())?;
    ensure(gb.is_solvable().unwrap(), || "abelian product reported non-solvable".into())?;
    within(start, Duration::from_secs(120), "product groups")
}

fn criterion_6(corpus: &Corpus) -> Check {
    let start = Instant::now();
    for (name, g) in &corpus.groups {
        let report = verify_cyclic_count_identity(g).map_err(|e| format!("{name}: {e}"))?;
        let eq = order_equation(g).unwrap();
        ensure(report.ok, || format!("{name}: {:?}", report.checks.iter().find(|c| !c.ok)))?;
        let covered: Vec<u64> = report.checks.iter().map(|c| c.n).collect();
        ensure(covered == eq.spectrum().to_vec(), || format!("{name}: checked {covered:?}"))?;
    }
    println!("    {} groups", corpus.groups.len());
    within(start, Duration::from_secs(120), "identity suite")
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let out = cli(&["two-orders", "--builtin", "D8", "--builtin", "Q8"]);
    ensure(out.exit_code == EXIT_OK, || out.text.clone())?;
    let out = cli(&["order-type", "--builtin", "D8", "--builtin", "Q8"]);
    ensure(out.exit_code == EXIT_NEGATIVE, || out.text.clone())?;
    let w = &out.report.results["witnesses"][0];
    ensure(*w == json!({"kind": "order_type", "d": 2, "count_a": 6, "count_b": 2}), || format!("witness {w}"))?;
    for (name, classes) in [("D8", 8), ("Q8", 6)] {
        let out = cli(&["lattice", "--builtin", name]);
        let got = &out.report.results["class_count"];
        ensure(*got == json!(classes), || format!("{name}: {got} classes"))?;
    }
    let out = cli(&["burnside-check", "--builtin", "D8", "--builtin", "Q8"]);
    ensure(out.exit_code == EXIT_NEGATIVE && out.report.results["verdict"] == json!("OBSTRUCTED"), || out.text.clone())?;
    within(start, Duration::from_secs(1), "D8/Q8")
}

fn criterion_8(corpus: &Corpus) -> Check {
    let start = Instant::now();
    let s3 = table_of_marks(&resolve_builtin("S3", None).unwrap()).unwrap();
    let oracle = vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]];
    ensure(s3.marks == oracle, || format!("S3 table {:?}", s3.marks))?;
    let mut checked = 0;
    for (name, g) in corpus.small() {
        let order = g.order() as u64;
        let lattice = SubgroupLattice::compute(g).map_err(|e| format!("{name}: {e}"))?;
        let t = table_of_marks(g).unwrap();
        let elements: Vec<Raw> = g.enumerate().unwrap().iter().map(raw).collect();
        for (i, row) in t.marks.iter().enumerate() {
            let h = &t.class_order[i];
            for (j, &m) in row.iter().enumerate() {
                let k = &t.class_order[j];
                ensure(!(j > i || k.order > h.order) || m == 0, || format!("{name}: marks[{i}][{j}] = {m}"))?;
            }
            ensure(row[0] == order / h.order, || format!("{name}: marks[{i}][1] = {}", row[0]))?;
            let rep: Vec<Raw> = lattice.representative_elements(i).iter().map(raw).collect();
            let members: HashSet<&Raw> = rep.iter().collect();
            let normalizer = elements
                .iter()
                .filter(|x| rep.iter().all(|y| members.contains(&mul(&mul(&inv(x), y), x))))
                .count() as u64;
            ensure(row[i] == normalizer / h.order, || format!("{name}: marks[{i}][{i}] = {}, |N| = {normalizer}", row[i]))?;
        }
        checked += 1;
    }
    println!("    {checked} small groups");
    within(start, Duration::from_secs(10), "marks properties")
}

fn criterion_9(corpus: &Corpus) -> Check {
    let start = Instant::now();
    for (name, g) in &corpus.groups {
        let eq = order_equation(g).unwrap();
        let exponent = eq.exponent();
        // Distinct cycle-length sets, with multiplicity, computed from raw images.
        let mut shapes: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        for x in g.enumerate().unwrap().iter() {
            let mut lens = cycle_lengths(&raw(x));
            lens.sort_unstable();
            lens.dedup();
            *shapes.entry(lens).or_insert(0) += 1;
        }
        for d in 1..=exponent {
            let direct: u64 = shapes.iter().filter(|(lens, _)| lens.iter().all(|l| d % l == 0)).map(|(_, c)| c).sum();
            let divisor_sum = eq.g_of_d(d);
            ensure(direct == divisor_sum, || format!("{name}: d = {d}, direct {direct}, divisor sum {divisor_sum}"))?;
        }
    }
    within(start, Duration::from_secs(60), "G(d) consistency")
}

fn criterion_10(corpus: &Corpus) -> Check {
    let start = Instant::now();
    let invariants: Vec<_> = corpus.groups.iter().map(|(n, g)| (n, burnside_invariants(g).unwrap())).collect();
    let mut pairs = 0;
    let mut compatible = 0;
    for (na, ia) in &invariants {
        for (nb, ib) in &invariants {
            let order_type = compare_order_type(&ia.order_equation, &ib.order_equation).equal;
            let two_orders = compare_two_orders(&ia.order_equation, &ib.order_equation).equal;
            ensure(!order_type || two_orders, || format!("{na} vs {nb}: same order type but not two orders type"))?;
            let verdict = compare_invariants(ia, ib).verdict;
            ensure(verdict == Verdict::Obstructed || order_type, || format!("{na} vs {nb}: COMPATIBLE but order types differ"))?;
            pairs += 1;
            compatible += (verdict == Verdict::Compatible) as usize;
        }
    }
    println!("    {pairs} ordered pairs, {compatible} compatible");
    within(start, Duration::from_secs(300), "implication chain")
}

fn main() {
    let cache = tempfile::tempdir().expect("cache directory");
    let cache_dir = cache.path().to_str().unwrap().to_string();
    let corpus_start = Instant::now();
    let corpus = Corpus::build();
    println!("corpus: {} groups built in {:.2?}", corpus.groups.len(), corpus_start.elapsed());

    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("order equation of 2^4:A7", Box::new(criterion_1)),
        ("unique extension variant matching the order equation", Box::new(criterion_2)),
        ("order-type equal for the two order-40320 groups", Box::new(|| criterion_3(&cache_dir))),
        ("order-1152 subgroup: found in 2^4:A7, NONE in L3(4):2_2, OBSTRUCTED", Box::new(|| criterion_4(&cache_dir))),
        ("A5^3 vs C30^3 x C2^3", Box::new(criterion_5)),
        ("cyclic count identity on the corpus", Box::new(|| criterion_6(&corpus))),
        ("D8/Q8 discrimination", Box::new(criterion_7)),
        ("table of marks properties", Box::new(|| criterion_8(&corpus))),
        ("G(d) divisor sum equals direct count", Box::new(|| criterion_9(&corpus))),
        ("implication chain across corpus pairs", Box::new(|| criterion_10(&corpus))),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS ({elapsed:.2?}) {title}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL ({elapsed:.2?}) {title}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
