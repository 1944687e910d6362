use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{
    Cmp, Extended, Fact, FactRelation, GroupValue, InvLex, Kind, Obstruction, ObstructionKind,
    QoError, QuasiOrder,
};
use crate::ring::{Element, Ideal, Monomial, Ring};

/// Primes up to this bound get a p-adic valuation and a trivial
/// quasi-ordering in the integer catalog unless configured otherwise.
pub const DEFAULT_PRIME_BOUND: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    IntLeq,
    PAdic(u64),
    Trivial,
    /// Positive cone: lowest-degree coefficient positive.
    LowestCoeff,
    /// Positive cone: leading coefficient positive.
    LeadingCoeff,
    /// `f ⪯ g` iff `f(0) <= g(0)`.
    ConstantTerm,
    /// `f ↦ -deg f`
    NegDegree,
    /// `f ↦` order of vanishing at 0.
    OrderAtZero,
    /// `f ↦` inverse-lexicographic minimum of the exponent pairs.
    InvLexMin,
    /// `f ↦` minimum X-exponent over Y-free monomials, `∞` if there is none.
    YFreeXOrder,
    /// `f ↦` minimum Y-exponent.
    YOrder,
}

/// A named closed-form quasi-ordering of the catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    id: String,
    ring: Ring,
    rule: Rule,
    kind: Kind,
    support: Ideal,
    description: String,
    provenance: String,
    facts: Vec<Fact>,
    obstructions: Vec<Obstruction>,
}

impl CatalogEntry {
    fn new(
        id: impl Into<String>,
        ring: Ring,
        rule: Rule,
        support: Ideal,
        description: &str,
        provenance: &str,
    ) -> Self {
        let kind = match rule {
            Rule::IntLeq | Rule::LowestCoeff | Rule::LeadingCoeff | Rule::ConstantTerm => {
                Kind::Ordering
            }
            _ => Kind::Valuation,
        };
        CatalogEntry {
            id: id.into(),
            ring,
            rule,
            kind,
            support,
            description: description.to_string(),
            provenance: provenance.to_string(),
            facts: Vec::new(),
            obstructions: Vec::new(),
        }
    }

    /// The trivial quasi-ordering with support `support`, which must be
    /// prime for the result to be a quasi-ordering.
    pub fn trivial(ring: Ring, support: Ideal) -> Self {
        let id = format!("{}:triv:{}", ring.id(), support.label());
        let desc = format!("two classes: {support} and its complement");
        CatalogEntry::new(
            id,
            ring,
            Rule::Trivial,
            support,
            &desc,
            "trivial quasi-ordering, induced by the trivial valuation with this support",
        )
    }

    /// Looks up an id in the catalog of its ring. P-adic ids beyond
    /// `prime_bound` are accepted as long as the index is prime.
    pub fn lookup(id: &str, prime_bound: u64) -> Result<CatalogEntry, QoError> {
        let unknown = || QoError::UnknownId(id.to_string());
        let prefix = id.split(':').next().ok_or_else(unknown)?;
        let ring = Ring::from_id(prefix).map_err(|_| unknown())?;
        let mut bound = prime_bound;
        if ring == Ring::Integers {
            if let Some(p) = id
                .strip_prefix("Z:vp:")
                .or_else(|| id.strip_prefix("Z:triv:"))
                .and_then(|s| s.parse::<u64>().ok())
            {
                bound = bound.max(p.min(10_000));
            }
        }
        catalog(ring, bound)
            .into_iter()
            .find(|e| e.id == id)
            .ok_or_else(unknown)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn support(&self) -> &Ideal {
        &self.support
    }

    fn value_of(&self, x: &Element) -> Extended<GroupValue> {
        match (self.rule, x) {
            (Rule::PAdic(p), Element::Int(n)) => padic(n, p),
            (Rule::Trivial, _) => {
                if self.support.contains_unchecked(x) {
                    Extended::Infinity
                } else {
                    Extended::Finite(GroupValue::Int(0))
                }
            }
            (rule, Element::Poly(p)) => {
                let terms = p.terms();
                if terms.is_empty() {
                    return Extended::Infinity;
                }
                let ms = terms.iter().map(|(m, _)| *m);
                let int = |v: u32| Extended::Finite(GroupValue::Int(v as i64));
                match rule {
                    Rule::NegDegree => {
                        let d = ms.map(|m| m.degree()).max().unwrap_or(0);
                        Extended::Finite(GroupValue::Int(-(d as i64)))
                    }
                    Rule::OrderAtZero => int(ms.map(|m| m.x).min().unwrap_or(0)),
                    Rule::InvLexMin => {
                        let m = ms
                            .map(|m| InvLex::new(m.x as i64, m.y as i64))
                            .min()
                            .expect("nonzero polynomial");
                        Extended::Finite(GroupValue::InvLex(m))
                    }
                    Rule::YFreeXOrder => ms
                        .filter(|m| m.y == 0)
                        .map(|m| m.x)
                        .min()
                        .map_or(Extended::Infinity, int),
                    Rule::YOrder => int(ms.map(|m| m.y).min().unwrap_or(0)),
                    _ => unreachable!("ordering rule {rule:?} has no value"),
                }
            }
            (rule, _) => unreachable!("rule {rule:?} applied to an element of the wrong ring"),
        }
    }

    fn with_facts(mut self, facts: Vec<Fact>) -> Self {
        self.facts = facts;
        self
    }
}

fn padic(n: &BigInt, p: u64) -> Extended<GroupValue> {
    if n.is_zero() {
        return Extended::Infinity;
    }
    let mut k = 0i64;
    if let Some(mut m) = n.to_i64() {
        let p = p as i64;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
    } else {
        let p = BigInt::from(p);
        let mut m = n.clone();
        loop {
            let (q, r) = m.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            m = q;
            k += 1;
        }
    }
    Extended::Finite(GroupValue::Int(k))
}

/// Compares the coefficients of `x` and `y` at the first monomial where they
/// differ, scanning from the lowest (or highest) monomial. A result of `Less`
/// means the difference `y - x` has a positive coefficient there.
fn first_difference(x: &[(Monomial, BigRational)], y: &[(Monomial, BigRational)], lowest: bool) -> Ordering {
    let zero = BigRational::zero();
    let (mut i, mut j) = (0usize, 0usize);
    let (nx, ny) = (x.len(), y.len());
    while i < nx || j < ny {
        let tx = (i < nx).then(|| if lowest { &x[i] } else { &x[nx - 1 - i] });
        let ty = (j < ny).then(|| if lowest { &y[j] } else { &y[ny - 1 - j] });
        let (mx, cx, my, cy) = match (tx, ty) {
            (Some((mx, cx)), Some((my, cy))) => (Some(mx), cx, Some(my), cy),
            (Some((mx, cx)), None) => (Some(mx), cx, None, &zero),
            (None, Some((my, cy))) => (None, &zero, Some(my), cy),
            (None, None) => unreachable!(),
        };
        // Which monomial comes first in scan direction?
        let order = match (mx, my) {
            (Some(a), Some(b)) => {
                if lowest {
                    a.cmp(b)
                } else {
                    b.cmp(a)
                }
            }
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => unreachable!(),
        };
        match order {
            Ordering::Less => return cx.cmp(&zero),
            Ordering::Greater => return zero.cmp(cy),
            Ordering::Equal => {
                let o = cx.cmp(cy);
                if o != Ordering::Equal {
                    return o;
                }
                i += 1;
                j += 1;
            }
        }
    }
    Ordering::Equal
}

impl QuasiOrder for CatalogEntry {
    fn id(&self) -> &str {
        &self.id
    }

    fn ring(&self) -> Ring {
        self.ring
    }

    fn compare(&self, x: &Element, y: &Element) -> Cmp {
        match (self.rule, x, y) {
            (Rule::IntLeq, Element::Int(a), Element::Int(b)) => a.cmp(b).into(),
            (Rule::LowestCoeff, Element::Poly(a), Element::Poly(b)) => {
                first_difference(a.terms(), b.terms(), true).into()
            }
            (Rule::LeadingCoeff, Element::Poly(a), Element::Poly(b)) => {
                first_difference(a.terms(), b.terms(), false).into()
            }
            (Rule::ConstantTerm, Element::Poly(a), Element::Poly(b)) => {
                let zero = BigRational::zero();
                let ca = a.constant_term().unwrap_or(&zero);
                let cb = b.constant_term().unwrap_or(&zero);
                ca.cmp(cb).into()
            }
            (Rule::Trivial, _, _) => {
                let ix = self.support.contains_unchecked(x);
                let iy = self.support.contains_unchecked(y);
                iy.cmp(&ix).into()
            }
            _ => self.value_of(y).cmp(&self.value_of(x)).into(),
        }
    }

    fn declared_kind(&self) -> Kind {
        self.kind
    }

    fn declared_support(&self) -> Option<&Ideal> {
        Some(&self.support)
    }

    fn provenance(&self) -> &str {
        &self.provenance
    }

    fn is_trivial(&self) -> bool {
        self.rule == Rule::Trivial
    }

    fn value(&self, x: &Element) -> Option<Extended<GroupValue>> {
        (self.kind == Kind::Valuation).then(|| self.value_of(x))
    }

    fn facts(&self) -> &[Fact] {
        &self.facts
    }

    fn obstructions(&self) -> &[Obstruction] {
        &self.obstructions
    }
}

fn finer(other: &str, citation: &str) -> Fact {
    Fact {
        other: other.to_string(),
        relation: FactRelation::Finer,
        citation: citation.to_string(),
    }
}

fn not_finer(other: &str, x: Element, y: Element, citation: &str) -> Fact {
    Fact {
        other: other.to_string(),
        relation: FactRelation::NotFiner { witness: (x, y) },
        citation: citation.to_string(),
    }
}

const TRIVIAL_MAXIMUM: &str =
    "the trivial quasi-ordering at a prime is the maximum among quasi-orderings with that support";

fn obstruction(ideal: Ideal, kind: ObstructionKind, explanation: &str) -> Obstruction {
    Obstruction {
        ideal,
        kind,
        explanation: explanation.to_string(),
    }
}

/// The shipped quasi-orderings of `ring`. For the integers, `prime_bound`
/// selects the primes that get a p-adic valuation and a trivial
/// quasi-ordering.
pub fn catalog(ring: Ring, prime_bound: u64) -> Vec<CatalogEntry> {
    let mut entries = match ring {
        Ring::Integers => integer_catalog(prime_bound),
        Ring::PolyUni => univariate_catalog(),
        Ring::PolyBi => bivariate_catalog(),
    };
    // Every entry is finer than the trivial quasi-ordering at its support.
    let trivial_ids: Vec<(Ideal, String)> = entries
        .iter()
        .filter(|e| e.is_trivial())
        .map(|e| (e.support.clone(), e.id.clone()))
        .collect();
    for e in entries.iter_mut().filter(|e| !e.is_trivial()) {
        if let Some((_, t)) = trivial_ids.iter().find(|(s, _)| *s == e.support) {
            e.facts.insert(0, finer(t, TRIVIAL_MAXIMUM));
        }
    }
    entries
}

fn integer_catalog(prime_bound: u64) -> Vec<CatalogEntry> {
    let z = Ring::Integers;
    let primes = crate::ring::primes_up_to(prime_bound);
    let zero = Ideal::zero(z);
    let int = |n: u64| Element::Int(BigInt::from(n));

    let mut entries = vec![CatalogEntry::new(
        "Z:leq",
        z,
        Rule::IntLeq,
        zero.clone(),
        "x ⪯ y iff x <= y",
        "standard ordering of the integers",
    )];
    for &p in &primes {
        let mut e = CatalogEntry::new(
            format!("Z:vp:{p}"),
            z,
            Rule::PAdic(p),
            zero.clone(),
            &format!("x ⪯ y iff v_{p}(y) <= v_{p}(x), v_{p} the exponent of {p}"),
            &format!("{p}-adic valuation"),
        );
        e.obstructions.push(obstruction(
            Ideal::integer(p),
            ObstructionKind::BelowOne,
            &format!(
                "every multiple z of {p} has v_{p}(z) >= 1 > 0 = v_{p}(1), so x*y ≺ 1 \
                 for x = {p} and every y; the value semigroup on the integers is nonnegative"
            ),
        ));
        entries.push(e);
    }
    entries.push(CatalogEntry::trivial(z, zero));
    for &p in &primes {
        entries.push(CatalogEntry::trivial(z, Ideal::integer(p)));
    }

    // Pairwise facts. `at` is the prime an entry is attached to, if any.
    let at = |e: &CatalogEntry| -> Option<u64> {
        match e.rule {
            Rule::PAdic(p) => Some(p),
            Rule::Trivial => e.support.label().parse::<u64>().ok().filter(|&p| p != 0),
            _ => None,
        }
    };
    let snapshot = entries.clone();
    for e in entries.iter_mut() {
        let mut facts = Vec::new();
        for f in &snapshot {
            if f.id == e.id {
                continue;
            }
            let (ep, fp) = (at(e), at(f));
            if let (Rule::PAdic(p), Rule::Trivial, Some(q)) = (e.rule, f.rule, fp) {
                if p == q {
                    facts.push(finer(
                        &f.id,
                        &format!(
                            "({p}) is v_{p}-convex: 0 ⪯ x ⪯ y with y in ({p}) gives \
                             v_{p}(x) >= v_{p}(y) >= 1"
                        ),
                    ));
                    continue;
                }
            }
            if let Some(q) = fp {
                if ep != Some(q) {
                    facts.push(not_finer(
                        &f.id,
                        int(1),
                        int(q),
                        &format!(
                            "0 ⪯ 1 ⪯ {q} holds on the left since 1 and {q} are not separated, \
                             while {q} ≺ 1 on the right"
                        ),
                    ));
                    continue;
                }
            }
            match (e.rule, f.rule, ep) {
                (Rule::Trivial, Rule::Trivial, Some(q)) if fp.is_none() => {
                    facts.push(not_finer(
                        &f.id,
                        int(q),
                        int(0),
                        &format!("{q} ∼ 0 on the left but 0 ≺ {q} on the right"),
                    ));
                }
                (Rule::Trivial, Rule::PAdic(_), Some(q)) => {
                    facts.push(not_finer(
                        &f.id,
                        int(q),
                        int(q * q),
                        &format!("{q} ∼ {} on the left but v_{q} separates them", q * q),
                    ));
                }
                (Rule::PAdic(_) | Rule::Trivial, Rule::IntLeq, _) => {
                    facts.push(not_finer(
                        &f.id,
                        int(0),
                        Element::Int(BigInt::from(-1)),
                        "a valuation has 0 ⪯ -1, an ordering has -1 < 0",
                    ));
                }
                _ => {}
            }
        }
        e.facts = facts;
    }
    entries
}

fn univariate_catalog() -> Vec<CatalogEntry> {
    let r = Ring::PolyUni;
    let zero = Ideal::zero(r);
    let xi = Ideal::parse(r, "(X)").expect("(X)");
    let mut pa = CatalogEntry::new(
        "QX:Pa",
        r,
        Rule::LowestCoeff,
        zero.clone(),
        "positive cone: polynomials whose lowest-degree nonzero coefficient is positive",
        "called the Archimedean ordering by convention; under this cone X is infinitesimal \
         (0 < X < 1/n for all n), so the name does not describe the cone",
    );
    pa.obstructions.push(obstruction(
        xi.clone(),
        ObstructionKind::BelowOne,
        "1 - z has constant term 1 > 0 for every z in (X), so X*y < 1 for every y",
    ));
    let pna = CatalogEntry::new(
        "QX:Pna",
        r,
        Rule::LeadingCoeff,
        zero.clone(),
        "positive cone: polynomials whose leading coefficient is positive",
        "called the non-Archimedean ordering by convention; X is infinitely large under it",
    )
    .with_facts(vec![finer(
        "QX:vdeg",
        "for 0 <= f <= g under the leading-coefficient cone, deg f <= deg g, \
         i.e. v_deg(g) <= v_deg(f)",
    )]);
    let mut vdeg = CatalogEntry::new(
        "QX:vdeg",
        r,
        Rule::NegDegree,
        zero.clone(),
        "v(f) = -deg f",
        "degree valuation",
    );
    vdeg.obstructions.push(obstruction(
        xi.clone(),
        ObstructionKind::NeverEquivalentToOne,
        "nonzero multiples of X have degree >= 1, so their value is <= -1 and never 0 = v(1)",
    ));
    let mut w = CatalogEntry::new(
        "QX:w",
        r,
        Rule::OrderAtZero,
        zero.clone(),
        "w(f) = order of vanishing of f at 0 (smallest exponent)",
        "X-adic valuation",
    );
    w.obstructions.push(obstruction(
        xi.clone(),
        ObstructionKind::BelowOne,
        "every multiple of X has order >= 1 > 0 = w(1) at 0",
    ));
    let eval0 = CatalogEntry::new(
        "QX:eval0",
        r,
        Rule::ConstantTerm,
        xi.clone(),
        "f ⪯ g iff f(0) <= g(0)",
        "derived example: ordering pulled back along evaluation at 0; its support (X) strictly \
         contains (0)",
    );
    vec![
        pa,
        pna,
        vdeg,
        w,
        eval0,
        CatalogEntry::trivial(r, zero),
        CatalogEntry::trivial(r, xi),
    ]
}

fn bivariate_catalog() -> Vec<CatalogEntry> {
    let r = Ring::PolyBi;
    let p = |s: &str| r.parse(s).expect("static element");
    let zero = Ideal::zero(r);
    let yi = Ideal::parse(r, "(Y)").expect("(Y)");
    let xy = Ideal::parse(r, "(X,Y)").expect("(X,Y)");
    let mut v = CatalogEntry::new(
        "QXY:v",
        r,
        Rule::InvLexMin,
        zero.clone(),
        "v(f) = minimum of the exponent pairs (i, j) of f, Z x Z ordered by j first, then i",
        "valuation with value group Z x Z under the inverse lexicographic order",
    )
    .with_facts(vec![
        finer(
            "QXY:u",
            "u(g) < u(f) means a larger Y-power in f, hence v(g) < v(f)",
        ),
        finer(
            "QXY:w",
            "w(g) < w(f) means g has a Y-free monomial below every Y-free monomial of f, \
             hence v(g) < v(f)",
        ),
        finer("QXY:triv:Y", "(Y) is v-convex"),
    ]);
    v.obstructions.push(obstruction(
        xy.clone(),
        ObstructionKind::BelowOne,
        "every monomial of a z in (X,Y) has exponent pair above (0,0), so v(z) > 0 = v(1)",
    ));
    let mut w = CatalogEntry::new(
        "QXY:w",
        r,
        Rule::YFreeXOrder,
        yi.clone(),
        "w(f) = minimum X-exponent over the Y-free monomials of f, infinity if there are none",
        "X-adic valuation of Q[X] pulled back along Y = 0",
    )
    .with_facts(vec![not_finer(
        "QXY:u",
        p("Y"),
        p("Y^2"),
        "Y and Y^2 both lie in the support (Y) of w, but u(Y^2) = 2 > 1 = u(Y)",
    )]);
    w.obstructions.push(obstruction(
        xy.clone(),
        ObstructionKind::BelowOne,
        "every z in (X,Y) has w(z) >= 1 > 0 = w(1)",
    ));
    let mut u = CatalogEntry::new(
        "QXY:u",
        r,
        Rule::YOrder,
        zero.clone(),
        "u(f) = minimum Y-exponent of f",
        "Y-adic valuation",
    )
    .with_facts(vec![
        not_finer(
            "QXY:w",
            p("X"),
            p("X^2"),
            "u(X^2) = u(X) = 0 gives 0 ⪯ X ⪯ X^2 under u, but w(X) = 1 < 2 = w(X^2)",
        ),
        finer("QXY:triv:Y", "(Y) is u-convex"),
    ]);
    u.obstructions.push(obstruction(
        yi.clone(),
        ObstructionKind::BelowOne,
        "every z in (Y) has u(z) >= 1 > 0 = u(1)",
    ));
    vec![
        v,
        w,
        u,
        CatalogEntry::trivial(r, zero),
        CatalogEntry::trivial(r, yi),
        CatalogEntry::trivial(r, xy),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qo::classify;

    fn entry(id: &str) -> CatalogEntry {
        CatalogEntry::lookup(id, DEFAULT_PRIME_BOUND).unwrap()
    }

    #[test]
    fn two_adic_compare() {
        let v2 = entry("Z:vp:2");
        let z = Ring::Integers;
        assert_eq!(v2.compare(&z.from_int(2), &z.from_int(3)), Cmp::Less);
        assert_eq!(v2.compare(&z.from_int(0), &z.from_int(1)), Cmp::Less);
        assert_eq!(v2.compare(&z.from_int(6), &z.from_int(-2)), Cmp::Equivalent);
    }

    #[test]
    fn bivariate_w_on_powers_of_x() {
        let w = entry("QXY:w");
        let r = Ring::PolyBi;
        assert_eq!(
            w.compare(&r.parse("X^2").unwrap(), &r.parse("X").unwrap()),
            Cmp::Less
        );
        assert!(w.in_support(&r.parse("X*Y + Y^2").unwrap()));
    }

    #[test]
    fn cones_compare_by_the_right_coefficient() {
        let r = Ring::PolyUni;
        let (x, one) = (r.parse("X").unwrap(), r.one());
        // X is infinitesimal for the lowest-coefficient cone...
        assert_eq!(entry("QX:Pa").compare(&x, &one), Cmp::Less);
        // ...and infinitely large for the leading-coefficient cone.
        assert_eq!(entry("QX:Pna").compare(&x, &one), Cmp::Greater);
        let f = r.parse("X^2 - X").unwrap();
        let g = r.parse("2*X^2 + X").unwrap();
        assert_eq!(entry("QX:Pa").compare(&f, &g), Cmp::Less);
        assert_eq!(entry("QX:Pna").compare(&f, &g), Cmp::Less);
        assert_eq!(entry("QX:Pna").compare(&g, &f), Cmp::Greater);
        assert_eq!(entry("QX:eval0").compare(&f, &g), Cmp::Equivalent);
    }

    #[test]
    fn classify_matches_declared_kind() {
        for ring in Ring::ALL {
            for e in catalog(ring, 7) {
                assert_eq!(classify(&e), e.declared_kind(), "{}", e.id());
            }
        }
    }

    #[test]
    fn catalog_ids() {
        let ids = |r| catalog(r, 5).iter().map(|e| e.id().to_string()).collect::<Vec<_>>();
        assert_eq!(
            ids(Ring::Integers),
            [
                "Z:leq", "Z:vp:2", "Z:vp:3", "Z:vp:5", "Z:triv:0", "Z:triv:2", "Z:triv:3",
                "Z:triv:5"
            ]
        );
        assert_eq!(
            ids(Ring::PolyUni),
            ["QX:Pa", "QX:Pna", "QX:vdeg", "QX:w", "QX:eval0", "QX:triv:0", "QX:triv:X"]
        );
        assert_eq!(
            ids(Ring::PolyBi),
            ["QXY:v", "QXY:w", "QXY:u", "QXY:triv:0", "QXY:triv:Y", "QXY:triv:X,Y"]
        );
    }

    #[test]
    fn lookup_beyond_the_prime_bound() {
        assert!(CatalogEntry::lookup("Z:vp:23", 5).is_ok());
        assert!(CatalogEntry::lookup("Z:vp:4", 5).is_err());
        assert!(CatalogEntry::lookup("QX:nope", 5).is_err());
    }

    #[test]
    fn integer_facts_cover_every_pair() {
        let cat = catalog(Ring::Integers, 7);
        for e in &cat {
            for f in &cat {
                if e.id() == f.id() {
                    continue;
                }
                assert!(
                    e.facts().iter().any(|fact| fact.other == f.id()),
                    "{} vs {}",
                    e.id(),
                    f.id()
                );
            }
        }
    }

    #[test]
    fn invlex_values() {
        let v = entry("QXY:v");
        let r = Ring::PolyBi;
        let val = |s: &str| v.value(&r.parse(s).unwrap()).unwrap();
        assert_eq!(val("X + Y"), Extended::Finite(GroupValue::InvLex(InvLex::new(1, 0))));
        assert_eq!(val("X*Y"), Extended::Finite(GroupValue::InvLex(InvLex::new(1, 1))));
        assert_eq!(val("0"), Extended::Infinity);
    }
}
