// Loops run over element indices shared by the context and the class table.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Ctx, VerifyError};
use crate::qo::{classify, Cmp, Kind, QuasiOrder};
use crate::ring::{Element, Universe};

/// One `∼`-class of non-support elements, i.e. one value of the extracted
/// valuation.
#[derive(Debug, Clone, Serialize)]
pub struct ValueClass {
    pub representative: Element,
    /// Universe members of the class; empty for classes that only appear as
    /// products during the closure pass.
    pub members: Vec<Element>,
    pub from_closure: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckCount {
    pub check: &'static str,
    pub tuples: u64,
}

/// The value semigroup read off a valuation-type quasi-ordering: classes of
/// `∼` outside the support, listed in increasing value order
/// (`[x] <= [y]` iff `y ⪯ x`), with the partial addition `[x] + [y] = [xy]`.
#[derive(Debug, Clone, Serialize)]
pub struct ValueTable {
    pub qo: String,
    pub universe: String,
    pub classes: Vec<ValueClass>,
    /// Index of the class of 1.
    pub neutral: usize,
    /// `(a, b, a + b)` for every pair of universe classes.
    pub addition: Vec<(usize, usize, usize)>,
    /// Universe elements of value `∞`.
    pub infinity: Vec<Element>,
    pub checks: Vec<CheckCount>,
}

impl ValueTable {
    /// Number of classes with universe members.
    pub fn base_classes(&self) -> usize {
        self.classes.iter().filter(|c| !c.from_closure).count()
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.addition
            .iter()
            .find(|(x, y, _)| *x == a && *y == b)
            .map(|t| t.2)
    }

    /// Class index of a universe element, `None` for the support.
    pub fn class_of(&self, x: &Element) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(x))
    }
}

/// Extraction failure, carrying the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("value-semigroup check `{check}` failed at {}: {detail}", fmt_witness(.witness))]
pub struct ExtractError {
    pub check: String,
    pub witness: Vec<Element>,
    pub detail: String,
}

fn fmt_witness(w: &[Element]) -> String {
    let parts: Vec<String> = w.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn fail<T>(check: &str, witness: Vec<Element>, detail: impl Into<String>) -> Result<T, ExtractError> {
    Err(ExtractError {
        check: check.to_string(),
        witness,
        detail: detail.into(),
    })
}

/// Builds the value semigroup of a valuation-type quasi-ordering on the
/// universe and verifies it: well-definedness of the class order and of the
/// addition, a strict total order on classes, neutrality of `[1]`,
/// associativity, cancellation and monotonicity where sums are defined, V1-V4
/// for the induced map and the round trip `x ⪯ y ⇔ v(y) <= v(x)`.
///
/// Products of two universe classes whose class is not yet known are added as
/// new classes (one multiplication deep), so every sum of two universe classes
/// is defined.
pub fn extract_valuation(qo: &dyn QuasiOrder, universe: &Universe) -> Result<ValueTable, ExtractError> {
    let kind = classify(qo);
    if kind != Kind::Valuation {
        let e = VerifyError::NotAValuation {
            qo: qo.id().to_string(),
            found: kind,
        };
        return fail("precondition", vec![], e.to_string());
    }
    let ctx = Ctx::new(qo, universe).map_err(|e| ExtractError {
        check: "precondition".into(),
        witness: vec![],
        detail: e.to_string(),
    })?;
    let n = ctx.n;
    let z = ctx.zero;
    let mut counts: BTreeMap<&'static str, u64> = BTreeMap::new();

    // Universe classes.
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut reps: Vec<usize> = Vec::new();
    let mut infinity = Vec::new();
    for x in 0..n {
        if ctx.eq(x, z) {
            infinity.push(x);
            continue;
        }
        match reps.iter().position(|&r| ctx.eq(r, x)) {
            Some(k) => class_of[x] = Some(k),
            None => {
                class_of[x] = Some(reps.len());
                reps.push(x);
            }
        }
    }
    // The order between classes must not depend on the representatives.
    for x in 0..n {
        for y in 0..n {
            let (Some(a), Some(b)) = (class_of[x], class_of[y]) else {
                continue;
            };
            *counts.entry("class-order-well-defined").or_default() += 1;
            let expected = if a == b {
                Cmp::Equivalent
            } else {
                ctx.c(reps[a], reps[b])
            };
            if ctx.c(x, y) != expected {
                return fail(
                    "class-order-well-defined",
                    ctx.tuple(&[x, y, reps[a], reps[b]]),
                    "comparison of members differs from comparison of representatives",
                );
            }
        }
    }

    // Closure pass: classes of products of two non-support universe elements.
    let mut all_reps: Vec<Element> = reps.iter().map(|&r| ctx.el(r).clone()).collect();
    let base = reps.len();
    let mut table: BTreeMap<(usize, usize), (usize, usize, usize)> = BTreeMap::new();
    for x in 0..n {
        let Some(a) = class_of[x] else { continue };
        for y in 0..n {
            let Some(b) = class_of[y] else { continue };
            *counts.entry("addition-well-defined").or_default() += 1;
            let p = ctx.el(x) * ctx.el(y);
            if qo.in_support(&p) {
                return fail(
                    "support-prime",
                    ctx.tuple(&[x, y]),
                    "product of two non-support elements lies in the support",
                );
            }
            let c = match all_reps.iter().position(|r| qo.equiv(r, &p)) {
                Some(c) => c,
                None => {
                    all_reps.push(p);
                    all_reps.len() - 1
                }
            };
            match table.get(&(a, b)) {
                None => {
                    table.insert((a, b), (c, x, y));
                }
                Some(&(c0, x0, y0)) if c0 != c => {
                    return fail(
                        "addition-well-defined",
                        ctx.tuple(&[x0, y0, x, y]),
                        "equivalent factors with inequivalent products",
                    );
                }
                Some(_) => {}
            }
        }
    }

    // Strict total order on all classes: the rank of a class is the number
    // of classes strictly below it in value order.
    let k = all_reps.len();
    let mut rank = vec![0usize; k];
    for a in 0..k {
        for b in 0..k {
            if a != b {
                let c = qo.compare(&all_reps[a], &all_reps[b]);
                if c == Cmp::Equivalent {
                    return fail(
                        "class-order-strict",
                        vec![all_reps[a].clone(), all_reps[b].clone()],
                        "two distinct classes are equivalent",
                    );
                }
                // [b] < [a] in value order iff a ≺ b.
                if c == Cmp::Less {
                    rank[a] += 1;
                }
            }
        }
    }
    let mut seen = vec![false; k];
    for (a, &r) in rank.iter().enumerate() {
        if r >= k || seen[r] {
            return fail(
                "class-order-total",
                vec![all_reps[a].clone()],
                "class ranks do not form a total order",
            );
        }
        seen[r] = true;
    }
    *counts.entry("class-order-total").or_default() += (k * k) as u64;

    // Renumber by rank.
    let r = |c: usize| rank[c];
    let mut classes: Vec<ValueClass> = (0..k)
        .map(|_| ValueClass {
            representative: Element::Int(0.into()),
            members: vec![],
            from_closure: false,
        })
        .collect();
    for c in 0..k {
        classes[r(c)] = ValueClass {
            representative: all_reps[c].clone(),
            members: vec![],
            from_closure: c >= base,
        };
    }
    for x in 0..n {
        if let Some(c) = class_of[x] {
            classes[r(c)].members.push(ctx.el(x).clone());
        }
    }
    let add: BTreeMap<(usize, usize), usize> = table
        .iter()
        .map(|(&(a, b), &(c, _, _))| ((r(a), r(b)), r(c)))
        .collect();
    let is_base = |c: usize| !classes[c].from_closure;
    let base_ids: Vec<usize> = (0..k).filter(|&c| is_base(c)).collect();
    let neutral = r(class_of[ctx.one].expect("1 is outside the support"));
    let rep_of = |c: usize| classes[c].representative.clone();

    for &a in &base_ids {
        *counts.entry("neutral").or_default() += 1;
        if add[&(neutral, a)] != a || add[&(a, neutral)] != a {
            return fail("neutral", vec![rep_of(a)], "[1] is not neutral");
        }
    }

    for &a in &base_ids {
        for &b in &base_ids {
            let ab = add[&(a, b)];
            for &c in &base_ids {
                let bc = add[&(b, c)];
                if let (Some(l), Some(rr)) = (add.get(&(ab, c)), add.get(&(a, bc))) {
                    *counts.entry("associativity").or_default() += 1;
                    if l != rr {
                        return fail(
                            "associativity",
                            vec![rep_of(a), rep_of(b), rep_of(c)],
                            "([a] + [b]) + [c] differs from [a] + ([b] + [c])",
                        );
                    }
                }
            }
        }
    }

    for &a in &base_ids {
        for &x in &base_ids {
            for &y in &base_ids {
                if x == y {
                    continue;
                }
                *counts.entry("cancellation").or_default() += 1;
                if add[&(a, x)] == add[&(a, y)] || add[&(x, a)] == add[&(y, a)] {
                    return fail(
                        "cancellation",
                        vec![rep_of(a), rep_of(x), rep_of(y)],
                        "[a] + [x] = [a] + [y] with [x] != [y]",
                    );
                }
                for &b in &base_ids {
                    if let (Some(l), Some(rr)) = (
                        add.get(&(add[&(a, x)], b)),
                        add.get(&(add[&(a, y)], b)),
                    ) {
                        *counts.entry("cancellation").or_default() += 1;
                        if l == rr {
                            return fail(
                                "cancellation",
                                vec![rep_of(a), rep_of(x), rep_of(b), rep_of(y)],
                                "[a] + [x] + [b] = [a] + [y] + [b] with [x] != [y]",
                            );
                        }
                    }
                }
                // Index order is value order.
                if x < y {
                    *counts.entry("monotone").or_default() += 1;
                    if add[&(a, x)] > add[&(a, y)] || add[&(x, a)] > add[&(y, a)] {
                        return fail(
                            "monotone",
                            vec![rep_of(a), rep_of(x), rep_of(y)],
                            "[x] < [y] but [a] + [x] > [a] + [y]",
                        );
                    }
                }
            }
        }
    }

    // The induced map v: universe -> classes ∪ {∞}, encoded as rank with
    // ∞ = k.
    let v: Vec<usize> = (0..n).map(|x| class_of[x].map_or(k, r)).collect();
    if v[z] != k {
        return fail("V1", ctx.tuple(&[z]), "v(0) is finite");
    }
    *counts.entry("V1").or_default() += 1;
    if v[ctx.one] != neutral {
        return fail("V2", ctx.tuple(&[ctx.one]), "v(1) is not the neutral class");
    }
    *counts.entry("V2").or_default() += 1;
    for x in 0..n {
        for y in 0..n {
            *counts.entry("V3").or_default() += 1;
            let p = ctx.el(x) * ctx.el(y);
            if v[x] == k || v[y] == k {
                if !qo.in_support(&p) {
                    return fail("V3", ctx.tuple(&[x, y]), "v(xy) finite although a factor has value ∞");
                }
            } else if !qo.equiv(&p, &rep_of(add[&(v[x], v[y])])) {
                return fail("V3", ctx.tuple(&[x, y]), "v(xy) != v(x) + v(y)");
            }
            *counts.entry("V4").or_default() += 1;
            // v(x + y) >= min(v(x), v(y)) says x + y ⪯ the ⪯-larger of x, y.
            let m = if v[x] <= v[y] { x } else { y };
            if !qo.le(&(ctx.el(x) + ctx.el(y)), ctx.el(m)) {
                return fail("V4", ctx.tuple(&[x, y]), "v(x + y) < min(v(x), v(y))");
            }
            *counts.entry("round-trip").or_default() += 1;
            if ctx.c(x, y) != Cmp::from(v[y].cmp(&v[x])) {
                return fail("round-trip", ctx.tuple(&[x, y]), "x ⪯ y does not match v(y) <= v(x)");
            }
        }
    }

    Ok(ValueTable {
        qo: qo.id().to_string(),
        universe: universe.descriptor(),
        addition: add
            .iter()
            .filter(|((a, b), _)| is_base(*a) && is_base(*b))
            .map(|(&(a, b), &c)| (a, b, c))
            .collect(),
        classes,
        neutral,
        infinity: infinity.iter().map(|&x| ctx.el(x).clone()).collect(),
        checks: counts
            .into_iter()
            .map(|(check, tuples)| CheckCount { check, tuples })
            .collect(),
    })
}
