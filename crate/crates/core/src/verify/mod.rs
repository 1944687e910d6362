//! Exhaustive verification of the quasi-ordering axioms, the ordering and
//! valuation axioms and the derived sign lemmas over a finite universe, plus
//! extraction of the value semigroup from a valuation-type quasi-ordering.
//!
//! Every universally quantified statement is checked on all tuples of
//! universe elements; sums and products of universe elements are computed
//! exactly and may leave the universe. Witnesses are the first failing tuple
//! in lexicographic universe order.

mod extract;
mod mutant;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::qo::{classify, Cmp, Extended, GroupValue, Kind, QuasiOrder};
use crate::ring::{Element, RingError, Universe};

pub use extract::{extract_valuation, ExtractError, ValueClass, ValueTable};
pub use mutant::{mutation_suite, Mutant, MutantKind, MutantOutcome, MutationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Reflexivity,
    Duality,
    Transitivity,
    QR1,
    QR2,
    QR3,
    QR4,
    O1,
    O2,
    O3,
    O4,
    ConeAdd,
    ConeMul,
    ConeTotal,
    SupportAbsorption,
    SupportNegation,
    NonpositiveNegation,
    Sign,
    NegationReverses,
    ValuationNonnegative,
    UltrametricMax,
    V1,
    V2,
    V3,
    V4,
    InducedOrder,
    PositivityTransfer,
    PositivityEquivalence,
}

impl Axiom {
    pub fn id(&self) -> &'static str {
        match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Duality => "duality",
            Axiom::Transitivity => "transitivity",
            Axiom::QR1 => "QR1",
            Axiom::QR2 => "QR2",
            Axiom::QR3 => "QR3",
            Axiom::QR4 => "QR4",
            Axiom::O1 => "O1",
            Axiom::O2 => "O2",
            Axiom::O3 => "O3",
            Axiom::O4 => "O4",
            Axiom::ConeAdd => "cone-add",
            Axiom::ConeMul => "cone-mul",
            Axiom::ConeTotal => "cone-total",
            Axiom::SupportAbsorption => "support-absorption",
            Axiom::SupportNegation => "support-negation",
            Axiom::NonpositiveNegation => "nonpositive-negation",
            Axiom::Sign => "sign",
            Axiom::NegationReverses => "negation-reverses",
            Axiom::ValuationNonnegative => "valuation-nonnegative",
            Axiom::UltrametricMax => "ultrametric-max",
            Axiom::V1 => "V1",
            Axiom::V2 => "V2",
            Axiom::V3 => "V3",
            Axiom::V4 => "V4",
            Axiom::InducedOrder => "induced-order",
            Axiom::PositivityTransfer => "positivity-transfer",
            Axiom::PositivityEquivalence => "positivity-equivalence",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Axiom::Reflexivity => "x ∼ x",
            Axiom::Duality => "compare(y, x) is the reverse of compare(x, y)",
            Axiom::Transitivity => "x ⪯ y and y ⪯ z imply x ⪯ z",
            Axiom::QR1 => "0 ≺ 1",
            Axiom::QR2 => "0 ⪯ a, b and x ⪯ y imply axb ⪯ ayb",
            Axiom::QR3 => "0 ≺ a, b and axb ⪯ ayb imply x ⪯ y",
            Axiom::QR4 => "z ≁ y and x ⪯ y imply x + z ⪯ y + z",
            Axiom::O1 => "0 < 1",
            Axiom::O2 => "0 <= a, b and x <= y imply axb <= ayb",
            Axiom::O3 => "xy <= 0 implies x <= 0 or y <= 0",
            Axiom::O4 => "x <= y implies x + z <= y + z",
            Axiom::ConeAdd => "P + P ⊆ P",
            Axiom::ConeMul => "P P ⊆ P",
            Axiom::ConeTotal => "P ∪ -P is everything",
            Axiom::SupportAbsorption => "x ∼ 0 implies x + y ∼ y",
            Axiom::SupportNegation => "x ∼ 0 implies -x ∼ 0",
            Axiom::NonpositiveNegation => "x ⪯ 0 implies 0 ⪯ -x",
            Axiom::Sign => "with -1 ≺ 0: 0 ⪯ x iff -x ⪯ 0, and x ≁ -x outside the support",
            Axiom::NegationReverses => "a ⪯ b ≺ 0 implies 0 ≺ -b ⪯ -a",
            Axiom::ValuationNonnegative => "with 0 ≺ -1: 0 ⪯ x",
            Axiom::UltrametricMax => "with 0 ≺ -1: x + y ⪯ max(x, y)",
            Axiom::V1 => "v(0) = ∞",
            Axiom::V2 => "v(1) = 0",
            Axiom::V3 => "v(xy) = v(x) + v(y)",
            Axiom::V4 => "v(x + y) >= min(v(x), v(y))",
            Axiom::InducedOrder => "x ⪯ y iff v(y) <= v(x)",
            Axiom::PositivityTransfer => "0 ⪯₁ x implies 0 ⪯₂ x",
            Axiom::PositivityEquivalence => "with equal supports: 0 ⪯₂ x implies 0 ⪯₁ x",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Axiom {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    /// Number of tuples satisfying the hypothesis, all of which satisfied
    /// the conclusion.
    Pass { tuples: u64 },
    Fail { witness: Vec<Element> },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub qo: String,
    pub universe: String,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub(crate) fn new(qo: &dyn QuasiOrder, universe: &Universe) -> Self {
        AxiomReport {
            qo: qo.id().to_string(),
            universe: universe.descriptor(),
            results: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, axiom: Axiom, outcome: Outcome) {
        self.results.push(AxiomResult { axiom, outcome });
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.outcome.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.outcome.passed())
    }

    pub fn get(&self, axiom: Axiom) -> Option<&Outcome> {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .map(|r| &r.outcome)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("{qo} is not an ordering (classify gives {found}); the ordering axioms do not apply")]
    NotAnOrdering { qo: String, found: Kind },
    #[error("{qo} is not a valuation-type quasi-ordering (classify gives {found})")]
    NotAValuation { qo: String, found: Kind },
    #[error("{qo} has no closed-form valuation map")]
    NoValuationMap { qo: String },
    #[error("universe is not closed under negation at `{0}`")]
    NotNegationClosed(Element),
}

/// Precomputed data shared by the checks: the comparison matrix and the
/// position of each element's negative.
pub(crate) struct Ctx<'a> {
    pub qo: &'a dyn QuasiOrder,
    pub u: &'a Universe,
    pub n: usize,
    cmp: Vec<Cmp>,
    pub neg: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

impl<'a> Ctx<'a> {
    pub fn new(qo: &'a dyn QuasiOrder, u: &'a Universe) -> Result<Self, VerifyError> {
        let ring = u.ring();
        if ring != qo.ring() {
            return Err(RingError::Mismatch {
                expected: qo.ring(),
                found: ring,
            }
            .into());
        }
        let els = u.elements();
        let n = els.len();
        let mut cmp = Vec::with_capacity(n * n);
        for x in els {
            for y in els {
                cmp.push(qo.compare(x, y));
            }
        }
        let neg = els
            .iter()
            .map(|x| {
                u.index_of(&-x)
                    .ok_or_else(|| VerifyError::NotNegationClosed(x.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let find = |e: Element| u.index_of(&e).expect("universe contains 0, 1, -1");
        Ok(Ctx {
            qo,
            u,
            n,
            cmp,
            neg,
            zero: find(ring.zero()),
            one: find(ring.one()),
        })
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize) -> Cmp {
        self.cmp[i * self.n + j]
    }

    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.c(i, j).is_le()
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.c(i, j) == Cmp::Less
    }

    #[inline]
    pub fn eq(&self, i: usize, j: usize) -> bool {
        self.c(i, j) == Cmp::Equivalent
    }

    pub fn el(&self, i: usize) -> &'a Element {
        self.u.get(i)
    }

    pub fn tuple(&self, idx: &[usize]) -> Vec<Element> {
        idx.iter().map(|&i| self.el(i).clone()).collect()
    }

    /// `sums[i * n + j] = x_i + x_j`
    pub fn sum_table(&self) -> Vec<Element> {
        let els = self.u.elements();
        let mut out = Vec::with_capacity(self.n * self.n);
        for x in els {
            for y in els {
                out.push(x + y);
            }
        }
        out
    }

    /// `prods[i * n + j] = x_i * x_j`
    pub fn product_table(&self) -> Vec<Element> {
        let els = self.u.elements();
        let mut out = Vec::with_capacity(self.n * self.n);
        for x in els {
            for y in els {
                out.push(x * y);
            }
        }
        out
    }
}

/// A small helper accumulating a pass count or the first failing tuple.
struct Tally {
    tuples: u64,
    witness: Option<Vec<Element>>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            tuples: 0,
            witness: None,
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn fail(&mut self, w: Vec<Element>) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    fn outcome(self) -> Outcome {
        match self.witness {
            Some(witness) => Outcome::Fail { witness },
            None => Outcome::Pass {
                tuples: self.tuples,
            },
        }
    }
}

fn check_relation(ctx: &Ctx, report: &mut AxiomReport) {
    let n = ctx.n;
    let mut refl = Tally::new();
    for i in 0..n {
        refl.tuples += 1;
        if ctx.c(i, i) != Cmp::Equivalent {
            refl.fail(ctx.tuple(&[i]));
            break;
        }
    }
    report.push(Axiom::Reflexivity, refl.outcome());

    let mut dual = Tally::new();
    'dual: for i in 0..n {
        for j in 0..n {
            dual.tuples += 1;
            if ctx.c(j, i) != ctx.c(i, j).reverse() {
                dual.fail(ctx.tuple(&[i, j]));
                break 'dual;
            }
        }
    }
    report.push(Axiom::Duality, dual.outcome());

    let mut trans = Tally::new();
    'trans: for i in 0..n {
        for j in 0..n {
            if !ctx.le(i, j) {
                continue;
            }
            for k in 0..n {
                if ctx.le(j, k) {
                    trans.tuples += 1;
                    if !ctx.le(i, k) {
                        trans.fail(ctx.tuple(&[i, j, k]));
                        break 'trans;
                    }
                }
            }
        }
    }
    report.push(Axiom::Transitivity, trans.outcome());
}

/// Checks QR2 and QR3 together. Because the shipped rings are commutative,
/// `a x b = (a b) x`, so the check runs over the distinct products `c = a b`
/// and weights each by the number of factorizations. Products are visited in
/// the order of their first factorization, which keeps the reported witness
/// the lexicographically first failing `(a, b, x, y)`.
fn check_qr23(ctx: &Ctx, qr2_hyp: impl Fn(usize) -> bool, qr3_hyp: impl Fn(usize) -> bool) -> (Tally, Tally) {
    let n = ctx.n;
    let els = ctx.u.elements();
    // distinct product -> (first a, first b, count for QR2, count for QR3)
    let mut firsts: Vec<(Element, usize, usize, u64, u64)> = Vec::new();
    let mut pos: HashMap<Element, usize> = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            let (h2, h3) = (qr2_hyp(a) && qr2_hyp(b), qr3_hyp(a) && qr3_hyp(b));
            if !h2 && !h3 {
                continue;
            }
            let c = &els[a] * &els[b];
            let k = *pos.entry(c.clone()).or_insert_with(|| {
                firsts.push((c, a, b, 0, 0));
                firsts.len() - 1
            });
            firsts[k].3 += h2 as u64;
            firsts[k].4 += h3 as u64;
        }
    }
    let le_pairs = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| ctx.le(i, j))
        .count() as u64;

    let mut qr2 = Tally::new();
    let mut qr3 = Tally::new();
    let mut prods: Vec<Element> = Vec::with_capacity(n);
    for (c, a, b, m2, m3) in &firsts {
        let do2 = *m2 > 0 && !qr2.failed();
        let do3 = *m3 > 0 && !qr3.failed();
        if !do2 && !do3 {
            continue;
        }
        prods.clear();
        prods.extend(els.iter().map(|x| c * x));
        let mut hyp3 = 0u64;
        for x in 0..n {
            for y in 0..n {
                let le = ctx.le(x, y);
                if !le && !do3 {
                    continue;
                }
                let r = ctx.qo.compare(&prods[x], &prods[y]).is_le();
                hyp3 += r as u64;
                if le && do2 && !r {
                    qr2.fail(ctx.tuple(&[*a, *b, x, y]));
                }
                if !le && do3 && r {
                    qr3.fail(ctx.tuple(&[*a, *b, x, y]));
                }
            }
        }
        if do2 && !qr2.failed() {
            qr2.tuples += m2 * le_pairs;
        }
        if do3 && !qr3.failed() {
            qr3.tuples += m3 * hyp3;
        }
        if qr2.failed() && qr3.failed() {
            break;
        }
    }
    (qr2, qr3)
}

/// Exhaustive check of QR1-QR4 (and the preorder laws of the oracle itself).
pub fn check_qr_axioms(qo: &dyn QuasiOrder, universe: &Universe) -> Result<AxiomReport, VerifyError> {
    let ctx = Ctx::new(qo, universe)?;
    let mut report = AxiomReport::new(qo, universe);
    check_relation(&ctx, &mut report);

    let qr1 = if ctx.lt(ctx.zero, ctx.one) {
        Outcome::Pass { tuples: 1 }
    } else {
        Outcome::Fail {
            witness: ctx.tuple(&[ctx.zero, ctx.one]),
        }
    };
    report.push(Axiom::QR1, qr1);

    let z = ctx.zero;
    let (qr2, qr3) = check_qr23(&ctx, |a| ctx.le(z, a), |a| ctx.lt(z, a));
    report.push(Axiom::QR2, qr2.outcome());
    report.push(Axiom::QR3, qr3.outcome());

    report.push(Axiom::QR4, check_translation(&ctx, &ctx.sum_table(), true).outcome());
    Ok(report)
}

/// `x ⪯ y ⇒ x + z ⪯ y + z`, restricted to `z ≁ y` when `guarded` (QR4) and
/// unrestricted otherwise (O4). Witness order `(x, y, z)`.
fn check_translation(ctx: &Ctx, sums: &[Element], guarded: bool) -> Tally {
    let n = ctx.n;
    let mut t = Tally::new();
    'outer: for x in 0..n {
        for y in 0..n {
            if !ctx.le(x, y) {
                continue;
            }
            for z in 0..n {
                if guarded && ctx.eq(z, y) {
                    continue;
                }
                t.tuples += 1;
                if !ctx.qo.le(&sums[x * n + z], &sums[y * n + z]) {
                    t.fail(ctx.tuple(&[x, y, z]));
                    break 'outer;
                }
            }
        }
    }
    t
}

/// Sign lemmas that hold in every quasi-ordered ring, plus the
/// valuation-only consequences when `classify` gives a valuation. The
/// ultrametric inequality `x + y ⪯ max(x, y)` fails for orderings (already
/// `1 + 1 > 1` in the integers), so it is only tested for valuation-type
/// quasi-orderings.
pub fn check_derived_lemmas(qo: &dyn QuasiOrder, universe: &Universe) -> Result<AxiomReport, VerifyError> {
    let ctx = Ctx::new(qo, universe)?;
    let mut report = AxiomReport::new(qo, universe);
    let n = ctx.n;
    let z = ctx.zero;
    let sums = ctx.sum_table();

    let mut absorb = Tally::new();
    'a: for x in 0..n {
        if !ctx.eq(x, z) {
            continue;
        }
        for y in 0..n {
            absorb.tuples += 1;
            if !qo.equiv(&sums[x * n + y], ctx.el(y)) {
                absorb.fail(ctx.tuple(&[x, y]));
                break 'a;
            }
        }
    }
    report.push(Axiom::SupportAbsorption, absorb.outcome());

    let mut supneg = Tally::new();
    for x in 0..n {
        if ctx.eq(x, z) {
            supneg.tuples += 1;
            if !ctx.eq(ctx.neg[x], z) {
                supneg.fail(ctx.tuple(&[x]));
                break;
            }
        }
    }
    report.push(Axiom::SupportNegation, supneg.outcome());

    let mut nonpos = Tally::new();
    for x in 0..n {
        if ctx.le(x, z) {
            nonpos.tuples += 1;
            if !ctx.le(z, ctx.neg[x]) {
                nonpos.fail(ctx.tuple(&[x]));
                break;
            }
        }
    }
    report.push(Axiom::NonpositiveNegation, nonpos.outcome());

    let kind = classify(qo);
    if kind == Kind::Ordering {
        let mut sign = Tally::new();
        for x in 0..n {
            sign.tuples += 1;
            let nx = ctx.neg[x];
            let iff = ctx.le(z, x) == ctx.le(nx, z);
            let split = ctx.eq(x, z) || !ctx.eq(x, nx);
            if !iff || !split {
                sign.fail(ctx.tuple(&[x]));
                break;
            }
        }
        report.push(Axiom::Sign, sign.outcome());
    }

    let mut rev = Tally::new();
    'r: for a in 0..n {
        for b in 0..n {
            if ctx.le(a, b) && ctx.lt(b, z) {
                rev.tuples += 1;
                let (na, nb) = (ctx.neg[a], ctx.neg[b]);
                if !(ctx.lt(z, nb) && ctx.le(nb, na)) {
                    rev.fail(ctx.tuple(&[a, b]));
                    break 'r;
                }
            }
        }
    }
    report.push(Axiom::NegationReverses, rev.outcome());

    if kind == Kind::Valuation {
        let mut nonneg = Tally::new();
        for x in 0..n {
            nonneg.tuples += 1;
            if !ctx.le(z, x) {
                nonneg.fail(ctx.tuple(&[x]));
                break;
            }
        }
        report.push(Axiom::ValuationNonnegative, nonneg.outcome());

        let mut ultra = Tally::new();
        'u: for x in 0..n {
            for y in 0..n {
                ultra.tuples += 1;
                let m = if ctx.le(x, y) { y } else { x };
                if !qo.le(&sums[x * n + y], ctx.el(m)) {
                    ultra.fail(ctx.tuple(&[x, y]));
                    break 'u;
                }
            }
        }
        report.push(Axiom::UltrametricMax, ultra.outcome());
    }
    Ok(report)
}

/// O1-O4 and the positive-cone closure properties. Only meaningful for
/// orderings; a valuation-type oracle is a precondition error.
pub fn check_ordering_axioms(qo: &dyn QuasiOrder, universe: &Universe) -> Result<AxiomReport, VerifyError> {
    let kind = classify(qo);
    if kind != Kind::Ordering {
        return Err(VerifyError::NotAnOrdering {
            qo: qo.id().to_string(),
            found: kind,
        });
    }
    let ctx = Ctx::new(qo, universe)?;
    let mut report = AxiomReport::new(qo, universe);
    let n = ctx.n;
    let z = ctx.zero;

    let o1 = if ctx.lt(z, ctx.one) {
        Outcome::Pass { tuples: 1 }
    } else {
        Outcome::Fail {
            witness: ctx.tuple(&[z, ctx.one]),
        }
    };
    report.push(Axiom::O1, o1);

    let (o2, _) = check_qr23(&ctx, |a| ctx.le(z, a), |_| false);
    report.push(Axiom::O2, o2.outcome());

    let prods = ctx.product_table();
    let zero = ctx.el(z);
    let mut o3 = Tally::new();
    for x in 0..n {
        for y in 0..n {
            if qo.le(&prods[x * n + y], zero) {
                o3.tuples += 1;
                if !(ctx.le(x, z) || ctx.le(y, z)) {
                    o3.fail(ctx.tuple(&[x, y]));
                    break;
                }
            }
        }
        if o3.failed() {
            break;
        }
    }
    report.push(Axiom::O3, o3.outcome());

    let sums = ctx.sum_table();
    report.push(Axiom::O4, check_translation(&ctx, &sums, false).outcome());

    let mut add = Tally::new();
    let mut mul = Tally::new();
    for x in 0..n {
        for y in 0..n {
            if ctx.le(z, x) && ctx.le(z, y) {
                if !add.failed() {
                    add.tuples += 1;
                    if !qo.le(zero, &sums[x * n + y]) {
                        add.fail(ctx.tuple(&[x, y]));
                    }
                }
                if !mul.failed() {
                    mul.tuples += 1;
                    if !qo.le(zero, &prods[x * n + y]) {
                        mul.fail(ctx.tuple(&[x, y]));
                    }
                }
            }
        }
    }
    report.push(Axiom::ConeAdd, add.outcome());
    report.push(Axiom::ConeMul, mul.outcome());

    let mut total = Tally::new();
    for x in 0..n {
        total.tuples += 1;
        if !(ctx.le(z, x) || ctx.le(z, ctx.neg[x])) {
            total.fail(ctx.tuple(&[x]));
            break;
        }
    }
    report.push(Axiom::ConeTotal, total.outcome());
    Ok(report)
}

/// V1-V4 for an oracle with a closed-form valuation map, and agreement of the
/// oracle with the order induced by that map.
pub fn check_valuation_map(qo: &dyn QuasiOrder, universe: &Universe) -> Result<AxiomReport, VerifyError> {
    let ring = universe.ring();
    let Some(_) = qo.value(&ring.zero()) else {
        return Err(VerifyError::NoValuationMap {
            qo: qo.id().to_string(),
        });
    };
    let ctx = Ctx::new(qo, universe)?;
    let v = |x: &Element| qo.value(x).expect("valuation map");
    let vals: Vec<Extended<GroupValue>> = universe.elements().iter().map(v).collect();
    let mut report = AxiomReport::new(qo, universe);
    let n = ctx.n;

    let single = |ok: bool, w: usize| {
        if ok {
            Outcome::Pass { tuples: 1 }
        } else {
            Outcome::Fail {
                witness: ctx.tuple(&[w]),
            }
        }
    };
    report.push(Axiom::V1, single(vals[ctx.zero].is_infinite(), ctx.zero));
    report.push(
        Axiom::V2,
        single(
            vals[ctx.one].finite().is_some_and(|g| g.is_zero()),
            ctx.one,
        ),
    );

    let els = universe.elements();
    let mut v3 = Tally::new();
    let mut v4 = Tally::new();
    let mut ind = Tally::new();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (&els[i], &els[j]);
            if !v3.failed() {
                v3.tuples += 1;
                if vals[i].checked_add(vals[j]) != Some(v(&(x * y))) {
                    v3.fail(ctx.tuple(&[i, j]));
                }
            }
            if !v4.failed() {
                v4.tuples += 1;
                if v(&(x + y)) < vals[i].min(vals[j]) {
                    v4.fail(ctx.tuple(&[i, j]));
                }
            }
            if !ind.failed() {
                ind.tuples += 1;
                if ctx.c(i, j) != Cmp::from(vals[j].cmp(&vals[i])) {
                    ind.fail(ctx.tuple(&[i, j]));
                }
            }
        }
    }
    report.push(Axiom::V3, v3.outcome());
    report.push(Axiom::V4, v4.outcome());
    report.push(Axiom::InducedOrder, ind.outcome());
    Ok(report)
}

/// Re-evaluates an axiom instance directly against the oracle; used to
/// confirm that a reported witness is genuine.
pub fn recheck(qo: &dyn QuasiOrder, axiom: Axiom, w: &[Element]) -> Option<bool> {
    let ring = qo.ring();
    let (zero, one) = (ring.zero(), ring.one());
    let holds = match (axiom, w) {
        (Axiom::Reflexivity, [x]) => qo.equiv(x, x),
        (Axiom::Duality, [x, y]) => qo.compare(y, x) == qo.compare(x, y).reverse(),
        (Axiom::Transitivity, [x, y, z]) => !(qo.le(x, y) && qo.le(y, z)) || qo.le(x, z),
        (Axiom::QR1 | Axiom::O1, [_, _]) => qo.lt(&zero, &one),
        (Axiom::QR2 | Axiom::O2, [a, b, x, y]) => {
            !(qo.le(&zero, a) && qo.le(&zero, b) && qo.le(x, y))
                || qo.le(&(&(a * x) * b), &(&(a * y) * b))
        }
        (Axiom::QR3, [a, b, x, y]) => {
            !(qo.lt(&zero, a) && qo.lt(&zero, b) && qo.le(&(&(a * x) * b), &(&(a * y) * b)))
                || qo.le(x, y)
        }
        (Axiom::QR4, [x, y, z]) => qo.equiv(z, y) || !qo.le(x, y) || qo.le(&(x + z), &(y + z)),
        (Axiom::O4, [x, y, z]) => !qo.le(x, y) || qo.le(&(x + z), &(y + z)),
        (Axiom::O3, [x, y]) => !qo.le(&(x * y), &zero) || qo.le(x, &zero) || qo.le(y, &zero),
        _ => return None,
    };
    Some(holds)
}

/// The complete battery for one oracle: preorder laws and QR1-QR4, derived
/// lemmas, then O1-O4 for orderings or value-semigroup extraction (and the
/// closed-form valuation map, when there is one) for valuations.
#[derive(Debug, Clone, Serialize)]
pub struct Battery {
    pub qo: String,
    pub declared_kind: Kind,
    pub classified: Kind,
    pub qr: AxiomReport,
    pub lemmas: AxiomReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ordering: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valuation_map: Option<AxiomReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_table: Option<Result<ValueTable, ExtractError>>,
}

impl Battery {
    pub fn run(qo: &dyn QuasiOrder, universe: &Universe) -> Result<Battery, VerifyError> {
        let classified = classify(qo);
        let qr = check_qr_axioms(qo, universe)?;
        let lemmas = check_derived_lemmas(qo, universe)?;
        let (ordering, valuation_map, value_table) = match classified {
            Kind::Ordering => (Some(check_ordering_axioms(qo, universe)?), None, None),
            _ => {
                let map = match check_valuation_map(qo, universe) {
                    Ok(r) => Some(r),
                    Err(VerifyError::NoValuationMap { .. }) => None,
                    Err(e) => return Err(e),
                };
                (None, map, Some(extract_valuation(qo, universe)))
            }
        };
        Ok(Battery {
            qo: qo.id().to_string(),
            declared_kind: qo.declared_kind(),
            classified,
            qr,
            lemmas,
            ordering,
            valuation_map,
            value_table,
        })
    }

    pub fn kind_agrees(&self) -> bool {
        self.declared_kind == Kind::Unknown || self.declared_kind == self.classified
    }

    pub fn all_pass(&self) -> bool {
        self.kind_agrees()
            && self.qr.all_pass()
            && self.lemmas.all_pass()
            && self.ordering.as_ref().is_none_or(|r| r.all_pass())
            && self.valuation_map.as_ref().is_none_or(|r| r.all_pass())
            && self.value_table.as_ref().is_none_or(|t| t.is_ok())
    }
}
