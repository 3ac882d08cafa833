//! Plain-text views of command results.

use std::fmt::Write;

use super::{CyclicRowOut, FindOut};
use crate::burnside::{MarksTable, Obstruction, ObstructionReport};
use crate::spectrum::{OrderEquation, TypeVerdict, Witness};
use crate::subgroups::{IdentityReport, SubgroupClassRow};

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub(super) fn spectrum(name: &str, order: u64, orders: &[u64]) -> String {
    format!("{name}: order {order}, spectrum {{{}}}\n", join(orders))
}

pub(super) fn order_equation(name: &str, eq: &OrderEquation) -> String {
    let mut s = format!("{name}: {}\n", eq.equation_string());
    for (n, c) in &eq.counts {
        let _ = writeln!(s, "  order {n:>3}: {c}");
    }
    s
}

fn witness(w: &Witness) -> String {
    match w {
        Witness::OrderType { d, count_a, count_b } => format!("minimal d = {d}: |A({d})| = {count_a}, |B({d})| = {count_b}"),
        Witness::Order { order_a, order_b } => format!("orders differ: {order_a} vs {order_b}"),
        Witness::Spectrum { only_in_a, only_in_b } => {
            format!("spectra differ: only in A {{{}}}, only in B {{{}}}", join(only_in_a), join(only_in_b))
        }
    }
}

pub(super) fn verdict(v: &TypeVerdict) -> String {
    if v.equal {
        return "equal\n".to_string();
    }
    let mut s = "not equal\n".to_string();
    for w in &v.witnesses {
        let _ = writeln!(s, "  {}", witness(w));
    }
    s
}

pub(super) fn cyclic_rows(rows: &[CyclicRowOut]) -> String {
    let mut s = format!("{:>5} {:>10} {:>10}  representative\n", "n", "class", "normalizer");
    for r in rows {
        let _ = writeln!(s, "{:>5} {:>10} {:>10}  {}", r.n, r.class_size, r.normalizer_order, r.representative);
    }
    s
}

pub(super) fn identity(report: &IdentityReport) -> String {
    let mut s = format!("{:>5} {:>10} {:>10}\n", "n", "lhs", "rhs");
    for c in &report.checks {
        let _ = writeln!(s, "{:>5} {:>10} {:>10}{}", c.n, c.lhs, c.rhs, if c.ok { "" } else { "  MISMATCH" });
    }
    s.push_str(if report.ok { "identity holds\n" } else { "identity fails\n" });
    s
}

pub(super) fn find(f: &FindOut) -> String {
    let mut s = if f.found {
        let solv = if f.is_solvable == Some(true) { "solvable" } else { "not solvable" };
        let mut s = format!("found a {solv} subgroup of order {}\n", f.order);
        for g in f.generators.iter().flatten() {
            let _ = writeln!(s, "  {g}");
        }
        s
    } else {
        format!("NONE: no subgroup of order {}\n", f.order)
    };
    if let Some(c) = &f.certificate {
        let _ = writeln!(
            s,
            "search over overgroups of a Sylow {}-subgroup of order {} (normalizer order {})",
            c.prime, c.sylow_order, c.sylow_normalizer_order
        );
        let _ = writeln!(
            s,
            "  {} candidate elements, {} classes at the first level",
            c.candidate_elements, c.first_level_representatives
        );
        let _ = writeln!(s, "  closures per level: {}", join(&c.closures_per_level));
        let _ = writeln!(
            s,
            "  closure orders: {}",
            join(c.closure_orders.iter().map(|(k, v)| format!("{k}: {v}")))
        );
    }
    s
}

pub(super) fn lattice(rows: &[SubgroupClassRow], total: u64) -> String {
    let mut s = format!("{:>6} {:>6}  cyclic nilpotent solvable  generators\n", "order", "class");
    for r in rows {
        let flag = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "{:>6} {:>6}  {:>6} {:>9} {:>8}  {}",
            r.order,
            r.class_size,
            flag(r.is_cyclic),
            flag(r.is_nilpotent),
            flag(r.is_solvable),
            join(&r.generators)
        );
    }
    let _ = writeln!(s, "{} classes, {total} subgroups", rows.len());
    s
}

pub(super) fn marks(t: &MarksTable) -> String {
    let width = t.class_order.iter().map(|c| c.label.len()).max().unwrap_or(1).max(
        t.marks.iter().flatten().map(|m| m.to_string().len()).max().unwrap_or(1),
    );
    let mut s = format!("{:>width$}", "");
    for c in &t.class_order {
        let _ = write!(s, " {:>width$}", c.label);
    }
    s.push('\n');
    for (c, row) in t.class_order.iter().zip(&t.marks) {
        let _ = write!(s, "{:>width$}", c.label);
        for m in row {
            let _ = write!(s, " {m:>width$}");
        }
        s.push('\n');
    }
    s
}

fn pairs(v: &[(u64, u64)]) -> String {
    join(v.iter().map(|(o, c)| format!("({o},{c})")))
}

pub(super) fn obstruction(r: &ObstructionReport) -> String {
    let mut s = format!("{}\n", r.verdict);
    for w in &r.witnesses {
        let line = match w {
            Obstruction::Order { order_a, order_b } => format!("orders differ: {order_a} vs {order_b}"),
            Obstruction::Spectrum { only_in_a, only_in_b } => {
                format!("spectra differ: only in A {{{}}}, only in B {{{}}}", join(only_in_a), join(only_in_b))
            }
            Obstruction::OrderType { d, count_a, count_b } => {
                format!("order type differs: |A({d})| = {count_a}, |B({d})| = {count_b}")
            }
            Obstruction::CyclicClasses { only_in_a, only_in_b } => {
                format!("cyclic classes (order,size) only in A: {}; only in B: {}", pairs(only_in_a), pairs(only_in_b))
            }
            Obstruction::SolvableClasses { only_in_a, only_in_b } => {
                format!("solvable classes only in A: {}; only in B: {}", pairs(only_in_a), pairs(only_in_b))
            }
            Obstruction::NilpotentClasses { only_in_a, only_in_b } => {
                format!("nilpotent classes only in A: {}; only in B: {}", pairs(only_in_a), pairs(only_in_b))
            }
            Obstruction::SolvableProbe { m, a, b } => {
                format!("solvable subgroup of order {m}: A {a:?}, B {b:?}")
            }
        };
        let _ = writeln!(s, "  {line}");
    }
    s
}
