//! Buchberger's algorithm over `F_p[x1..xd]` for global orders, with the
//! Gebauer-Moeller pair criteria and the normal selection strategy.
//!
//! Used for heights (`d - dim`), ideal membership and equality, colon ideals
//! and regular-element tests.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::Monomial;
use crate::order::{OrderKind, OrderSpec};
use crate::poly::Polynomial;

type Terms = Vec<(Monomial, u32)>;

/// Terms sorted descending under `ord`, leading term first.
fn sorted_desc(f: &Polynomial, ord: &OrderSpec) -> Terms {
    let mut t = f.terms().to_vec();
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

/// `a - c * m * b` for descending term lists.
fn sub_mul(a: &[(Monomial, u32)], c: u32, m: &Monomial, b: &[(Monomial, u32)], ord: &OrderSpec, field: PrimeField) -> Terms {
    let neg = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut bs = b.iter().map(|(bm, bc)| (bm.mul(m), field.mul(neg, *bc))).peekable();
    let mut ai = a.iter().peekable();
    loop {
        let step = match (ai.peek(), bs.peek()) {
            (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match step {
            Ordering::Greater => out.push(ai.next().unwrap().clone()),
            Ordering::Less => out.push(bs.next().unwrap()),
            Ordering::Equal => {
                let x = ai.next().unwrap();
                let y = bs.next().unwrap();
                let v = field.add(x.1, y.1);
                if v != 0 {
                    out.push((y.0, v));
                }
            }
        }
    }
    out
}

fn make_monic(t: &mut Terms, field: PrimeField) {
    if let Some(&(_, lc)) = t.first() {
        if lc != 1 {
            let inv = field.inv(lc);
            for e in t.iter_mut() {
                e.1 = field.mul(e.1, inv);
            }
        }
    }
}

/// Full reduction of `f` by monic reducers.
fn reduce_full(mut w: Terms, reducers: &[&Terms], ord: &OrderSpec, field: PrimeField) -> Terms {
    let mut rem = Terms::new();
    while !w.is_empty() {
        let (lm, lc) = w[0].clone();
        let hit = reducers.iter().find(|g| g[0].0.divides(&lm));
        match hit {
            Some(g) => {
                let q = lm.div(&g[0].0).unwrap();
                w = sub_mul(&w[1..], lc, &q, &g[1..], ord, field);
            }
            None => {
                rem.push(w.remove(0));
            }
        }
    }
    rem
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial, no term of one divisible by the leading monomial of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: OrderSpec,
    nvars: usize,
    field: PrimeField,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(|m| m.is_one())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    fn reducers(&self) -> Vec<Terms> {
        self.elements.iter().map(|e| sorted_desc(e, &self.order)).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: f.nvars(),
            });
        }
        let reds = self.reducers();
        let refs: Vec<&Terms> = reds.iter().collect();
        let r = reduce_full(sorted_desc(f, &self.order), &refs, &self.order, self.field);
        Ok(Polynomial::from_terms(self.nvars, self.field, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

fn validate(gens: &[Polynomial], ord: &OrderSpec) -> Result<PrimeField> {
    if ord.is_local() {
        return Err(Error::WrongOrderKind(ord.to_string()));
    }
    for g in gens {
        if g.nvars() != ord.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ord.nvars(),
                got: g.nvars(),
            });
        }
    }
    Ok(gens.first().map(|g| g.field()).unwrap_or_default())
}

/// Reduced Gröbner basis of `ideal(gens)` under a global order.
pub fn reduced_groebner(gens: &[Polynomial], ord: &OrderSpec) -> Result<GroebnerBasis> {
    let field = validate(gens, ord)?;
    let nvars = ord.nvars();
    let mut all: Vec<Terms> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut unit = false;

    let mut inputs: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| sorted_desc(g, ord))
        .collect();
    // small leading monomials first keeps early reducers useful
    inputs.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));

    let mut pending: std::collections::VecDeque<Terms> = inputs.into();
    loop {
        let h = if let Some(g) = pending.pop_front() {
            g
        } else if !pairs.is_empty() {
            let best = (0..pairs.len())
                .min_by(|&a, &b| ord.cmp(&pairs[a].lcm, &pairs[b].lcm))
                .unwrap();
            let p = pairs.swap_remove(best);
            s_polynomial(&all[p.i], &all[p.j], &p.lcm, ord, field)
        } else {
            break;
        };
        let refs: Vec<&Terms> = active.iter().map(|&k| &all[k]).collect();
        let mut h = reduce_full(h, &refs, ord, field);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, field);
        if h[0].0.is_one() {
            unit = true;
            break;
        }
        all.push(h);
        let hi = all.len() - 1;
        update(&all, &mut active, &mut pairs, hi);
    }

    let mut elements: Vec<Terms> = if unit {
        vec![vec![(Monomial::one(nvars), 1)]]
    } else {
        let basis: Vec<Terms> = active.iter().map(|&k| all[k].clone()).collect();
        interreduce(basis, ord, field)
    };
    elements.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    let leading = elements.iter().map(|e| e[0].0.clone()).collect();
    Ok(GroebnerBasis {
        order: *ord,
        nvars,
        field,
        elements: elements
            .into_iter()
            .map(|t| Polynomial::from_terms(nvars, field, t))
            .collect(),
        leading,
    })
}

fn s_polynomial(f: &Terms, g: &Terms, lcm: &Monomial, ord: &OrderSpec, field: PrimeField) -> Terms {
    let uf = lcm.div(&f[0].0).unwrap();
    let ug = lcm.div(&g[0].0).unwrap();
    let ff: Terms = f[1..].iter().map(|(m, c)| (m.mul(&uf), *c)).collect();
    sub_mul(&ff, 1, &ug, &g[1..], ord, field)
}

/// Gebauer-Moeller installation of the new element `h`.
fn update(all: &[Terms], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let lh = &all[h][0].0;
    let cand: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: all[g][0].0.lcm(lh),
        })
        .collect();
    let coprime = |p: &Pair| all[p.i][0].0.is_coprime(lh);
    let mut kept: Vec<Pair> = Vec::new();
    for (k, p) in cand.iter().enumerate() {
        if coprime(p) {
            kept.push(p.clone());
            continue;
        }
        let dominated = cand[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
            || kept.iter().any(|q| q.lcm.divides(&p.lcm));
        if !dominated {
            kept.push(p.clone());
        }
    }
    kept.retain(|p| !coprime(p));
    pairs.retain(|p| {
        !lh.divides(&p.lcm)
            || all[p.i][0].0.lcm(lh) == p.lcm
            || all[p.j][0].0.lcm(lh) == p.lcm
    });
    pairs.extend(kept);
    active.retain(|&g| !lh.divides(&all[g][0].0));
    active.push(h);
}

fn interreduce(basis: Vec<Terms>, ord: &OrderSpec, field: PrimeField) -> Vec<Terms> {
    let mut out = Vec::with_capacity(basis.len());
    for (i, b) in basis.iter().enumerate() {
        let others: Vec<&Terms> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, t)| t)
            .collect();
        let lead = b[0].clone();
        let mut tail = reduce_full(b[1..].to_vec(), &others, ord, field);
        let mut t = vec![lead];
        t.append(&mut tail);
        make_monic(&mut t, field);
        out.push(t);
    }
    out
}

/// Normal form of `f` with respect to a reduced basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

/// Largest size of a variable set containing the support of no leading
/// monomial; the dimension of the coordinate ring. `None` for the unit ideal.
pub fn krull_dimension(gb: &GroebnerBasis) -> Option<usize> {
    if gb.is_unit() {
        return None;
    }
    let d = gb.nvars;
    assert!(d <= 24, "subset search is limited to 24 variables");
    let masks: Vec<u64> = gb.leading.iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    for s in 0u64..(1u64 << d) {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    Some(best)
}

/// Height `d - dim` of `ideal(gens)` from a degrevlex basis; `None` for
/// the unit ideal.
pub fn height(gens: &[Polynomial], nvars: usize) -> Result<Option<usize>> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Some(0));
    }
    let gb = reduced_groebner(&nonzero, &OrderSpec::degrevlex(nvars))?;
    Ok(krull_dimension(&gb).map(|dim| nvars - dim))
}

/// Exact quotient `h / f`.
pub fn divide_exact(h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ord = OrderSpec::degrevlex(f.nvars());
    let field = f.field();
    let ft = sorted_desc(f, &ord);
    let inv = field.inv(ft[0].1);
    let mut w = sorted_desc(h, &ord);
    let mut q = Terms::new();
    while !w.is_empty() {
        let (lm, lc) = w[0].clone();
        let Some(u) = lm.div(&ft[0].0) else {
            return Err(Error::NotDivisible);
        };
        let c = field.mul(lc, inv);
        w = sub_mul(&w[1..], c, &u, &ft[1..], &ord, field);
        q.push((u, c));
    }
    Ok(Polynomial::from_terms(f.nvars(), field, q))
}

/// Reduced degrevlex basis of `(I : f) = {r : r f ∈ I}`.
///
/// `I ∩ (f)` is the elimination of `t` from `tI + (1 - t)f`; dividing its
/// generators by `f` gives the colon ideal.
pub fn colon_ideal(gens: &[Polynomial], f: &Polynomial) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = f.nvars();
    let field = f.field();
    let t = Polynomial::variable(d + 1, field, d);
    let one_minus_t = &Polynomial::one(d + 1, field) - &t;
    let mut lifted: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| &g.extend_vars(1) * &t)
        .collect();
    lifted.push(&f.extend_vars(1) * &one_minus_t);
    let elim = OrderSpec::new(OrderKind::Elimination { split: d }, d + 1)?;
    let gb = reduced_groebner(&lifted, &elim)?;
    let mut quotients = Vec::new();
    for e in gb.elements() {
        if e.terms().iter().all(|(m, _)| m.exponent(d) == 0) {
            quotients.push(divide_exact(&e.drop_var(d), f)?);
        }
    }
    reduced_groebner(&quotients, &OrderSpec::degrevlex(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    /// `(I : f) = I`.
    Regular,
    /// `(I : f)` is strictly larger than `I`.
    ZeroDivisor,
    /// `f ∈ I`; the question is not posed.
    InIdeal,
}

pub fn is_regular_element(f: &Polynomial, gens: &[Polynomial]) -> Result<Regularity> {
    let d = f.nvars();
    let gb = reduced_groebner(gens, &OrderSpec::degrevlex(d))?;
    if gb.contains(f)? {
        return Ok(Regularity::InIdeal);
    }
    let colon = colon_ideal(gens, f)?;
    Ok(if colon.elements() == gb.elements() {
        Regularity::Regular
    } else {
        Regularity::ZeroDivisor
    })
}

/// Height of the ideal generated by the degree-`(n-1)` initial forms of
/// `J ∩ m^{n-1}`; zero when there are none.
pub fn phi_height(gens: &[Polynomial], n: u32) -> Result<usize> {
    let forms = crate::trunc::phi_basis(gens, n)?;
    if forms.is_empty() {
        return Ok(0);
    }
    let d = forms[0].nvars();
    Ok(height(&forms, d)?.unwrap_or(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn polys(src: &[&str], d: usize) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(s, d, f()).unwrap()).collect()
    }

    fn drl(d: usize) -> OrderSpec {
        OrderSpec::degrevlex(d)
    }

    #[test]
    fn basis_examples() {
        let gb = reduced_groebner(&polys(&["x1", "x2"], 2), &drl(2)).unwrap();
        assert_eq!(gb.elements(), polys(&["x2", "x1"], 2).as_slice());
        let gb = reduced_groebner(&polys(&["x1^2 - x2", "x1*x2"], 2), &drl(2)).unwrap();
        assert!(gb.elements().contains(&polys(&["x2^2"], 2)[0]));
        assert_eq!(gb.normal_form(&polys(&["x2^2"], 2)[0]).unwrap(), Polynomial::zero(2, f()));
        let gb = reduced_groebner(&[Polynomial::zero(2, f())], &drl(2)).unwrap();
        assert!(gb.is_zero_ideal());
        let one = Polynomial::one(2, f());
        let gb = reduced_groebner(&polys(&["x1^2", "x1*x2"], 2), &drl(2)).unwrap();
        assert_eq!(gb.normal_form(&one).unwrap(), one);
        assert!(reduced_groebner(&polys(&["x1"], 2), &OrderSpec::lex(2)).is_err());
    }

    #[test]
    fn unit_ideal() {
        let gb = reduced_groebner(&polys(&["x1 + 1", "x1"], 2), &drl(2)).unwrap();
        assert!(gb.is_unit());
        assert_eq!(krull_dimension(&gb), None);
    }

    #[test]
    fn dimensions() {
        let gb = reduced_groebner(&polys(&["x1*x2"], 2), &drl(2)).unwrap();
        assert_eq!(krull_dimension(&gb), Some(1));
        let gb = reduced_groebner(&polys(&["x1", "x2", "x3"], 3), &drl(3)).unwrap();
        assert_eq!(krull_dimension(&gb), Some(0));
        assert_eq!(height(&polys(&["x1^2", "x2^3", "x3^4"], 3), 3).unwrap(), Some(3));
        assert_eq!(height(&polys(&["x1^2", "x1*x2"], 2), 2).unwrap(), Some(1));
    }

    #[test]
    fn colon_examples() {
        let c = colon_ideal(&polys(&["x1^2"], 2), &polys(&["x1"], 2)[0]).unwrap();
        assert_eq!(c.elements(), polys(&["x1"], 2).as_slice());
        let c = colon_ideal(&polys(&["x1*x2"], 2), &polys(&["x2"], 2)[0]).unwrap();
        assert_eq!(c.elements(), polys(&["x1"], 2).as_slice());
        let c = colon_ideal(&polys(&["x1*x2", "x1^3 + x2^3"], 2), &polys(&["x1 + x2"], 2)[0]).unwrap();
        let i = reduced_groebner(&polys(&["x1*x2", "x1^3 + x2^3"], 2), &drl(2)).unwrap();
        for e in c.elements() {
            let prod = e * &polys(&["x1 + x2"], 2)[0];
            assert!(i.contains(&prod).unwrap());
        }
    }

    #[test]
    fn regularity() {
        let x = polys(&["x1", "x2", "x1*x2"], 2);
        assert_eq!(is_regular_element(&x[1], &x[..1]).unwrap(), Regularity::Regular);
        assert_eq!(is_regular_element(&x[0], &x[2..]).unwrap(), Regularity::ZeroDivisor);
        assert_eq!(is_regular_element(&x[2], &x[..1]).unwrap(), Regularity::InIdeal);
    }

    #[test]
    fn exact_division() {
        let p = polys(&["x1^2 - x2^2", "x1 + x2", "x1 - x2", "x1 + 1"], 2);
        assert_eq!(divide_exact(&p[0], &p[1]).unwrap(), p[2]);
        assert_eq!(divide_exact(&p[0], &p[3]), Err(Error::NotDivisible));
    }

    #[test]
    fn phi_heights() {
        let m2 = polys(&["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"], 3);
        assert_eq!(phi_height(&m2, 3).unwrap(), 3);
        assert_eq!(phi_height(&polys(&["x1^2 + x2^3"], 2), 3).unwrap(), 1);
    }
}
