//! The law catalog. Each check returns [`Outcome::Vacuous`] when its
//! hypothesis is false, and on failure the sub-expressions it evaluated.
//!
//! A few statements need a reading choice to be checkable:
//! - `thm2.1.vi` is checked on `B⁰`: `{a} =₁ B⁰ ⟹ B⁰ = {a}`. Taken for an
//!   arbitrary set `B` it fails as soon as `B` is not an antichain.
//! - `prop4.5.i` concludes that `c(F)` is a filter containing `D`.
//! - `thm5.5.*` and `thm5.1.*` range over proper filters only.
//!
//! `thm5.5.ii` is checked exactly as stated and is false: on `fig3` the
//! filter `F_b` is a median D-filter, the join condition holds, and
//! `bar(bar(b)) = {b, c, f, 1}` leaves `F_b`. The usual argument for it
//! goes through `thm5.5.i`, which needs `F` prime; `thm5.5.ii.prime` adds
//! that hypothesis.

use crate::filters::Filter;
use crate::lattice::Lattice;
use crate::set::{Element, ElementSet};

use super::Value::{Elem as E, Flag as B, Set as S};
use super::{Bindings, Check, Law, Outcome};

fn verdict(ok: bool, evidence: impl FnOnce() -> Bindings) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(evidence())
    }
}

macro_rules! assume {
    ($hyp:expr) => {
        if !$hyp {
            return Outcome::Vacuous;
        }
    };
}

fn one(l: &Lattice) -> ElementSet {
    ElementSet::singleton(l.top())
}

fn zero(l: &Lattice) -> ElementSet {
    ElementSet::singleton(l.bottom())
}

fn meet_closed(l: &Lattice, a: ElementSet) -> bool {
    a.iter().all(|x| a.iter().all(|y| a.contains(l.meet(x, y))))
}

/// `x⁰⁰ ∨ y⁰⁰ ≤₁ (x ∨ y)⁰⁰` for all `x, y`.
fn join_condition(l: &Lattice) -> bool {
    l.elements().all(|x| {
        l.elements().all(|y| {
            let j = l.set_join(l.double_zero(x), l.double_zero(y));
            l.rel_leq1(j, l.double_zero(l.join(x, y)))
        })
    })
}

/// Condition (1), evaluated from its definition.
fn cond1_literal(l: &Lattice) -> bool {
    l.elements().all(|x| {
        l.zero_op_elem(x).iter().all(|y| {
            l.set_join(l.double_zero(x), l.double_zero(y))
                .contains(l.top())
        })
    })
}

/// Condition (2), evaluated from its definition.
fn cond2_literal(l: &Lattice) -> bool {
    l.elements().all(|x| {
        l.elements().all(|y| {
            let dense = l.zero_op_elem(l.join(x, y)) == zero(l);
            let co = l
                .set_join(l.double_zero(x), l.double_zero(y))
                .contains(l.top());
            dense == co
        })
    })
}

fn d_stonean(l: &Lattice) -> bool {
    l.is_d_stonean()
}

// ---- closure operators ----

fn lemma1_1(l: &Lattice) -> Outcome {
    let d = l.dense_set();
    let (bd, bl) = (l.bar(d), l.bar(l.all()));
    verdict(bd == l.all() && bl == d, || {
        vec![("D", S(d)), ("bar(D)", S(bd)), ("bar(L)", S(bl))]
    })
}

fn galois(
    a: ElementSet,
    b: ElementSet,
    op: impl Fn(ElementSet) -> ElementSet,
    names: [&'static str; 3],
) -> Outcome {
    let (fa, fb) = (op(a), op(b));
    let ffa = op(fa);
    let antitone = !a.is_subset(b) || fb.is_subset(fa);
    let extensive = a.is_subset(ffa);
    let idempotent = op(ffa) == fa;
    let adjoint = a.is_subset(fb) == b.is_subset(fa);
    verdict(antitone && extensive && idempotent && adjoint, || {
        vec![(names[0], S(fa)), (names[1], S(fb)), (names[2], S(ffa))]
    })
}

fn galois_bar(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    galois(a, b, |s| l.bar(s), ["bar(A)", "bar(B)", "bar(bar(A))"])
}

fn galois_dpolar(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    galois(a, b, |s| l.d_polar(s), ["A^D", "B^D", "A^DD"])
}

// ---- the zero operator ----

fn thm2_1_i(l: &Lattice, a: ElementSet) -> Outcome {
    let a0 = l.zero_op(a);
    let m = l.set_meet(a, a0);
    let ok = m.is_subset(zero(l)) && !a0.is_empty() && l.is_antichain(a0);
    verdict(ok, || vec![("A^0", S(a0)), ("A∧A^0", S(m))])
}

fn thm2_1_ii(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let m = l.set_meet(a, b);
    assume!(m.is_subset(zero(l)));
    let b0 = l.zero_op(b);
    verdict(l.rel_leq1(a, b0), || vec![("A∧B", S(m)), ("B^0", S(b0))])
}

fn thm2_1_iii(l: &Lattice, a: ElementSet) -> Outcome {
    let a00 = l.double_zero_set(a);
    verdict(l.rel_leq1(a, a00), || vec![("A^00", S(a00))])
}

fn thm2_1_iv(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    assume!(l.rel_leq1(a, b));
    let (a0, b0) = (l.zero_op(a), l.zero_op(b));
    verdict(l.rel_leq1(b0, a0), || vec![("A^0", S(a0)), ("B^0", S(b0))])
}

fn thm2_1_v(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let (a0, b0) = (l.zero_op(a), l.zero_op(b));
    verdict(l.rel_leq1(a, b0) == l.rel_leq1(b, a0), || {
        vec![("A^0", S(a0)), ("B^0", S(b0))]
    })
}

fn thm2_1_vi(l: &Lattice, a: Element, b: ElementSet) -> Outcome {
    let b0 = l.zero_op(b);
    let sa = ElementSet::singleton(a);
    assume!(l.rel_eq1(sa, b0));
    verdict(b0 == sa, || vec![("B^0", S(b0))])
}

fn thm2_1_vii(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let (a0, b0) = (l.zero_op(a), l.zero_op(b));
    assume!(l.rel_eq1(a0, b0));
    verdict(a0 == b0, || vec![("A^0", S(a0)), ("B^0", S(b0))])
}

fn thm2_1_viii(l: &Lattice, a: ElementSet) -> Outcome {
    let a0 = l.zero_op(a);
    let a000 = l.double_zero_set(a0);
    verdict(a000 == a0, || vec![("A^0", S(a0)), ("A^000", S(a000))])
}

fn thm2_1_ix(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let j0 = l.zero_op(l.set_join(a, b));
    let m = l.set_meet(l.zero_op(a), l.zero_op(b));
    verdict(l.rel_leq1(j0, m), || {
        vec![("(A∨B)^0", S(j0)), ("A^0∧B^0", S(m))]
    })
}

fn thm2_1_x(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let lhs = l.double_zero_set(l.set_meet(a, b));
    let rhs = l.set_meet(l.double_zero_set(a), l.double_zero_set(b));
    verdict(l.rel_eq1(lhs, rhs), || {
        vec![("(A∧B)^00", S(lhs)), ("A^00∧B^00", S(rhs))]
    })
}

fn thm2_1_xi(l: &Lattice, a: ElementSet, b: ElementSet) -> Outcome {
    let (a0, b0) = (l.zero_op(a), l.zero_op(b));
    let j = l.set_join(l.zero_op(a0), l.zero_op(b0));
    let m = l.set_meet(a0, b0);
    assume!(l.rel_leq1(j, l.zero_op(m)));
    let j0 = l.zero_op(j);
    verdict(l.rel_eq1(j0, m), || {
        vec![
            ("A^00∨B^00", S(j)),
            ("(A^00∨B^00)^0", S(j0)),
            ("A^0∧B^0", S(m)),
        ]
    })
}

fn remark2_3(l: &Lattice, x: Element, y: Element) -> Outcome {
    let j = l.set_join(l.double_zero(x), l.double_zero(y));
    let m = l.set_meet(l.zero_op_elem(x), l.zero_op_elem(y));
    assume!(l.rel_leq1(j, l.zero_op(m)) && j.contains(l.top()));
    verdict(m == zero(l), || {
        vec![("x^00∨y^00", S(j)), ("x^0∧y^0", S(m))]
    })
}

fn prop2_4(l: &Lattice, x: Element, y: Element) -> Outcome {
    assume!(l.is_sharp(x) && l.is_sharp(y));
    let m = l.meet(x, y);
    verdict(l.is_sharp(m), || {
        vec![("x∧y", E(m)), ("(x∧y)^00", S(l.double_zero(m)))]
    })
}

fn prop2_6(l: &Lattice) -> Outcome {
    let d = l.dense_set();
    verdict(l.is_filter(d), || vec![("D", S(d))])
}

fn thm2_8(l: &Lattice, a: ElementSet) -> Outcome {
    let ba = l.bar(a);
    let hyp = ba.iter().all(|x| {
        ba.iter().all(|y| {
            let (x00, y00) = (l.double_zero(x), l.double_zero(y));
            let premise = a.iter().all(|z| {
                let z00 = l.double_zero(z);
                l.set_meet(l.set_join(x00, z00), l.set_join(y00, z00))
                    .contains(l.top())
            });
            !premise
                || a.iter().all(|z| {
                    l.set_join(l.set_meet(x00, y00), l.double_zero(z))
                        .contains(l.top())
                })
        })
    });
    assume!(hyp);
    let ok = l.is_filter(ba) && l.dense_set().is_subset(ba);
    verdict(ok, || vec![("bar(A)", S(ba))])
}

// ---- Stonean conditions ----

fn def3_1_obs(l: &Lattice) -> Outcome {
    let c1 = cond1_literal(l);
    let c2 = cond2_literal(l);
    let via_bar = l
        .elements()
        .all(|x| l.zero_op_elem(x).is_subset(l.bar_elem(x)));
    let via_polar = l.elements().all(|x| l.bar_elem(x) == l.d_polar_elem(x));
    verdict(c1 == via_bar && c2 == via_polar, || {
        vec![
            ("cond1", B(c1)),
            ("x^0⊆bar(x)", B(via_bar)),
            ("cond2", B(c2)),
            ("bar(x)=x^D", B(via_polar)),
        ]
    })
}

fn prop3_3_i(l: &Lattice, a: Element) -> Outcome {
    let (a0, ba) = (l.zero_op_elem(a), l.bar_elem(a));
    assume!(l.rel_leq2(a0, ba) && l.is_stonean());
    let (bba, ba0) = (l.bar(ba), l.bar(a0));
    verdict(bba == ba0, || {
        vec![("bar(bar(x))", S(bba)), ("bar(x^0)", S(ba0))]
    })
}

fn prop3_3_ii(l: &Lattice) -> Outcome {
    let c1 = cond1_literal(l);
    let alt = l
        .elements()
        .all(|x| l.bar(l.bar_elem(x)).is_subset(l.bar(l.zero_op_elem(x))));
    verdict(c1 == alt, || {
        vec![("cond1", B(c1)), ("bar(bar(x))⊆bar(x^0)", B(alt))]
    })
}

fn lemma3_4(l: &Lattice, a: Element) -> Outcome {
    assume!(d_stonean(l));
    let j = l.set_join(ElementSet::singleton(a), l.zero_op_elem(a));
    verdict(j.is_subset(l.dense_set()), || {
        vec![("x∨x^0", S(j)), ("D", S(l.dense_set()))]
    })
}

fn thm3_7(l: &Lattice) -> Outcome {
    assume!(cond1_literal(l));
    let c2 = cond2_literal(l);
    let filters = l.all_filters();
    let st_i = filters
        .iter()
        .all(|f| l.bar(f.carrier()) == l.d_polar(f.carrier()));
    let st_ii = l.elements().all(|x| l.bar_elem(x) == l.d_polar_elem(x));
    let d = l.dense_set();
    let st_iii = filters.iter().all(|f| {
        filters.iter().all(|g| {
            f.carrier().intersection(g.carrier()).is_subset(d)
                == f.carrier().is_subset(l.bar(g.carrier()))
        })
    });
    verdict(c2 == st_i && c2 == st_ii && c2 == st_iii, || {
        vec![
            ("cond2", B(c2)),
            ("(i)", B(st_i)),
            ("(ii)", B(st_ii)),
            ("(iii)", B(st_iii)),
        ]
    })
}

// ---- c(F), coherent and closed filters ----

fn c_monotone(l: &Lattice, f: &Filter, g: &Filter) -> Outcome {
    assume!(f.carrier().is_subset(g.carrier()));
    let (cf, cg) = (l.c_operator(f), l.c_operator(g));
    verdict(cf.is_subset(cg), || vec![("c(F)", S(cf)), ("c(G)", S(cg))])
}

fn c_intersection(l: &Lattice, f: &Filter, g: &Filter) -> Outcome {
    let fg = l.principal_filter(l.join(f.generator(), g.generator()));
    let cfg = l.c_operator(&fg);
    let both = l.c_operator(f).intersection(l.c_operator(g));
    verdict(cfg.is_subset(both), || {
        vec![("c(F∩G)", S(cfg)), ("c(F)∩c(G)", S(both))]
    })
}

fn c_below_dense(l: &Lattice, f: &Filter) -> Outcome {
    assume!(f.carrier().is_subset(l.dense_set()));
    let cf = l.c_operator(f);
    verdict(f.carrier().is_subset(cf), || vec![("c(F)", S(cf))])
}

fn covers_with_bar(l: &Lattice, f: &Filter) -> bool {
    f.carrier()
        .iter()
        .all(|x| l.bar_elem(x).union(f.carrier()) == l.all())
}

fn lemma4_3(l: &Lattice, f: &Filter) -> Outcome {
    assume!(covers_with_bar(l, f));
    let cf = l.c_operator(f);
    verdict(f.carrier().is_subset(cf), || vec![("c(F)", S(cf))])
}

fn c_is_d_filter(l: &Lattice, cf: ElementSet) -> bool {
    meet_closed(l, cf) && l.is_filter(cf) && l.dense_set().is_subset(cf)
}

fn prop4_5_i(l: &Lattice, f: &Filter) -> Outcome {
    let cf = l.c_operator(f);
    assume!(l.is_proper(f) && meet_closed(l, cf));
    verdict(c_is_d_filter(l, cf), || vec![("c(F)", S(cf))])
}

fn prop4_5_ii(l: &Lattice, a: Element, b: Element) -> Outcome {
    let lhs = l
        .set_meet(l.bar_elem(a), l.bar_elem(b))
        .is_subset(l.bar_elem(l.meet(a, b)));
    let (a00, b00) = (l.double_zero(a), l.double_zero(b));
    let ab00 = l.double_zero(l.meet(a, b));
    let rhs = l.elements().all(|x| {
        l.elements().all(|y| {
            let premise = l
                .set_meet(
                    l.set_join(l.double_zero(x), a00),
                    l.set_join(l.double_zero(y), b00),
                )
                .contains(l.top());
            !premise
                || l.set_join(l.double_zero(l.meet(x, y)), ab00)
                    .contains(l.top())
        })
    });
    verdict(lhs == rhs, || {
        vec![
            ("bar(x)∧bar(y)⊆bar(x∧y)", B(lhs)),
            ("pointwise condition", B(rhs)),
        ]
    })
}

fn prop4_5_iii(l: &Lattice, f: &Filter) -> Outcome {
    let cf = l.c_operator(f);
    assume!(
        l.is_proper(f)
            && cf.iter().all(|x| {
                cf.iter().all(|y| {
                    l.set_meet(l.bar_elem(x), l.bar_elem(y))
                        .is_subset(l.bar_elem(l.meet(x, y)))
                })
            })
    );
    verdict(c_is_d_filter(l, cf), || vec![("c(F)", S(cf))])
}

fn thm4_6(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_d_filter(f) && d_stonean(l));
    let cf = l.c_operator(f);
    verdict(cf.is_subset(f.carrier()), || vec![("c(F)", S(cf))])
}

fn cor4_7(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_d_filter(f) && covers_with_bar(l, f) && d_stonean(l));
    let cf = l.c_operator(f);
    verdict(cf == f.carrier(), || vec![("c(F)", S(cf))])
}

fn cor4_8_i(l: &Lattice, a: ElementSet) -> Outcome {
    let ba = l.bar(a);
    verdict(l.dense_set().is_subset(ba), || {
        vec![("bar(A)", S(ba)), ("D", S(l.dense_set()))]
    })
}

fn cor4_8_ii(l: &Lattice, a: ElementSet) -> Outcome {
    let ba = l.bar(a);
    verdict((ba == l.all()) == a.is_subset(l.dense_set()), || {
        vec![("bar(A)", S(ba)), ("D", S(l.dense_set()))]
    })
}

fn cor4_8_iii(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_closed_filter(f));
    verdict(l.is_d_filter(f), || vec![("D", S(l.dense_set()))])
}

fn closed_intersection(l: &Lattice, f: &Filter, g: &Filter) -> Outcome {
    assume!(l.is_closed_filter(f) && l.is_closed_filter(g));
    let fg = f.carrier().intersection(g.carrier());
    let bb = l.bar(l.bar(fg));
    verdict(bb == fg, || vec![("F∩G", S(fg)), ("bar(bar(F∩G))", S(bb))])
}

// ---- maximal, prime and median filters ----

fn thm5_1_i(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_proper(f));
    let maximal = l.is_maximal(f);
    let meets = l
        .all()
        .difference(f.carrier())
        .iter()
        .all(|x| !l.zero_op_elem(x).is_disjoint(f.carrier()));
    verdict(maximal == meets, || {
        vec![("maximal", B(maximal)), ("x^0∩F≠∅ off F", B(meets))]
    })
}

fn thm5_1_ii(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_maximal(f));
    verdict(l.is_d_filter(f), || vec![("D", S(l.dense_set()))])
}

fn thm5_1_iii(l: &Lattice, f: &Filter) -> Outcome {
    let outside = l.all().difference(f.carrier());
    let bot = l.bottom();
    assume!(
        l.is_maximal(f)
            && outside.iter().all(|x| {
                outside.iter().all(|y| {
                    f.carrier().iter().all(|z| {
                        l.meet(x, z) != bot || l.meet(y, z) != bot || l.meet(l.join(x, y), z) == bot
                    })
                })
            })
    );
    verdict(l.is_prime(f), || vec![("prime", B(false))])
}

fn thm5_5_i(l: &Lattice, f: &Filter, a: Element) -> Outcome {
    assume!(
        !f.contains(a) && l.is_proper(f) && l.is_d_filter(f) && l.is_prime(f) && join_condition(l)
    );
    let ba = l.bar_elem(a);
    verdict(ba.is_subset(f.carrier()), || vec![("bar(a)", S(ba))])
}

fn thm5_5_ii(l: &Lattice, f: &Filter, a: Element) -> Outcome {
    assume!(
        f.contains(a) && l.is_proper(f) && l.is_d_filter(f) && l.is_median(f) && join_condition(l)
    );
    let bba = l.bar(l.bar_elem(a));
    verdict(bba.is_subset(f.carrier()), || vec![("bar(bar(a))", S(bba))])
}

/// The statement the published argument for `thm5.5.ii` actually
/// supports: it goes through `thm5.5.i`, which needs `F` prime.
fn thm5_5_ii_prime(l: &Lattice, f: &Filter, a: Element) -> Outcome {
    assume!(l.is_prime(f));
    thm5_5_ii(l, f, a)
}

fn thm5_5_iii(l: &Lattice, f: &Filter, a: Element) -> Outcome {
    assume!(f.contains(a) && l.is_proper(f));
    let a0 = l.zero_op_elem(a);
    verdict(!a0.is_subset(f.carrier()), || vec![("a^0", S(a0))])
}

fn thm5_5_iv(l: &Lattice, f: &Filter, a: Element) -> Outcome {
    assume!(l.is_proper(f) && l.is_d_filter(f) && l.is_prime(f) && d_stonean(l));
    let a0 = l.zero_op_elem(a);
    verdict(f.contains(a) == !a0.is_subset(f.carrier()), || {
        vec![("a^0", S(a0))]
    })
}

fn thm5_6_i(l: &Lattice, f: &Filter) -> Outcome {
    assume!(l.is_maximal(f) && l.is_coherent(f));
    verdict(l.is_median(f), || vec![("c(F)", S(l.c_operator(f)))])
}

fn thm5_6_ii(l: &Lattice, f: &Filter) -> Outcome {
    let bf = l.bar(f.carrier());
    assume!(l.is_maximal(f) && !bf.is_subset(f.carrier()));
    verdict(l.is_median(f), || vec![("bar(F)", S(bf))])
}

fn thm5_6_iii(l: &Lattice, f: &Filter) -> Outcome {
    let b = l.bar(l.all().difference(f.carrier()));
    assume!(l.is_maximal(f) && b == f.carrier());
    verdict(l.is_median(f), || vec![("bar(L∖F)", S(b))])
}

fn prop5_7_i(l: &Lattice, f: &Filter, a: Element, b: Element) -> Outcome {
    assume!(
        f.contains(a)
            && l.bar_elem(a) == l.bar_elem(b)
            && l.is_d_filter(f)
            && l.is_prime(f)
            && l.is_median(f)
            && d_stonean(l)
    );
    verdict(f.contains(b), || vec![("bar(a)", S(l.bar_elem(a)))])
}

fn prop5_7_ii(l: &Lattice, f: &Filter, a: Element, b: Element) -> Outcome {
    let ab = l.join(a, b);
    assume!(f.contains(ab) && l.is_prime(f) && l.is_median(f) && d_stonean(l));
    let d = l.dense_set();
    let found = l
        .all()
        .difference(f.carrier())
        .iter()
        .any(|c| d.contains(l.join(a, c)) || d.contains(l.join(b, c)));
    verdict(found, || vec![("a∨b", E(ab)), ("D", S(d))])
}

// ---- sanity ----

fn basics(l: &Lattice) -> Outcome {
    let (z, o) = (zero(l), one(l));
    let (d, s) = (l.dense_set(), l.sharp_set());
    let ok = l.zero_op(z) == o
        && l.zero_op(o) == z
        && d.contains(l.top())
        && z.union(o).is_subset(s)
        && d.intersection(s) == o
        && l.bar(z) == d
        && l.bar(o) == l.all()
        && l.is_closed_set(d);
    verdict(ok, || {
        vec![
            ("0^0", S(l.zero_op(z))),
            ("1^0", S(l.zero_op(o))),
            ("D", S(d)),
            ("S", S(s)),
        ]
    })
}

const fn law(id: &'static str, anchor: &'static str, conditional: bool, check: Check) -> Law {
    Law {
        id,
        anchor,
        conditional,
        check,
    }
}

pub(crate) static CATALOG: &[Law] = &[
    law(
        "basics",
        r"$0^0=1,\ 1^0=0,\ D\cap S=\{1\},\ \overline0=D,\ \overline1=L$",
        false,
        Check::Lattice(basics),
    ),
    law(
        "lemma1.1",
        r"$\overline D=L$ and $\overline L=D$",
        false,
        Check::Lattice(lemma1_1),
    ),
    law(
        "galois.bar",
        r"$A\subseteq B\Rightarrow\overline B\subseteq\overline A;\ A\subseteq\overline{\overline A};\ \overline{\overline{\overline A}}=\overline A;\ A\subseteq\overline B\Leftrightarrow B\subseteq\overline A$",
        false,
        Check::SetPair(galois_bar),
    ),
    law(
        "galois.dpolar",
        r"$A\subseteq B\Rightarrow B^D\subseteq A^D;\ A\subseteq A^{DD};\ A^{DDD}=A^D;\ A\subseteq B^D\Leftrightarrow B\subseteq A^D$",
        false,
        Check::SetPair(galois_dpolar),
    ),
    law(
        "thm2.1.i",
        r"$A\wedge A^0\subseteq\{0\}$",
        false,
        Check::Set(thm2_1_i),
    ),
    law(
        "thm2.1.ii",
        r"$A\wedge B\subseteq\{0\}\Rightarrow A\leq_1B^0$",
        true,
        Check::SetPair(thm2_1_ii),
    ),
    law(
        "thm2.1.iii",
        r"$A\leq_1A^{00}$",
        false,
        Check::Set(thm2_1_iii),
    ),
    law(
        "thm2.1.iv",
        r"$A\leq_1B\Rightarrow B^0\leq_1A^0$",
        true,
        Check::SetPair(thm2_1_iv),
    ),
    law(
        "thm2.1.v",
        r"$A\leq_1B^0\Leftrightarrow B\leq_1A^0$",
        false,
        Check::SetPair(thm2_1_v),
    ),
    law(
        "thm2.1.vi",
        r"$a=_1B^0\Rightarrow B^0=\{a\}$",
        true,
        Check::ElemSet(thm2_1_vi),
    ),
    law(
        "thm2.1.vii",
        r"$A^0=_1B^0\Rightarrow A^0=B^0$",
        true,
        Check::SetPair(thm2_1_vii),
    ),
    law(
        "thm2.1.viii",
        r"$A^{000}=A^0$",
        false,
        Check::Set(thm2_1_viii),
    ),
    law(
        "thm2.1.ix",
        r"$(A\vee B)^0\leq_1A^0\wedge B^0$",
        false,
        Check::SetPair(thm2_1_ix),
    ),
    law(
        "thm2.1.x",
        r"$(A\wedge B)^{00}=_1A^{00}\wedge B^{00}$",
        false,
        Check::SetPair(thm2_1_x),
    ),
    law(
        "thm2.1.xi",
        r"$A^{00}\vee B^{00}\leq_1(A^0\wedge B^0)^0\Rightarrow(A^{00}\vee B^{00})^0=_1A^0\wedge B^0$",
        true,
        Check::SetPair(thm2_1_xi),
    ),
    law(
        "remark2.3",
        r"$a^{00}\vee b^{00}\leq_1(a^0\wedge b^0)^0,\ 1\in a^{00}\vee b^{00}\Rightarrow a^0\wedge b^0=0$",
        true,
        Check::ElemPair(remark2_3),
    ),
    law(
        "prop2.4",
        r"$a,b\in S\Rightarrow a\wedge b\in S$",
        true,
        Check::ElemPair(prop2_4),
    ),
    law(
        "prop2.6",
        r"$D$ is a filter",
        false,
        Check::Lattice(prop2_6),
    ),
    law(
        "thm2.8",
        r"$\forall x,y\in\overline A:\ [\forall z\in A:1\in(x^{00}\vee z^{00})\wedge(y^{00}\vee z^{00})]\Rightarrow[\forall z\in A:1\in(x^{00}\wedge y^{00})\vee z^{00}]$ implies $\overline A$ is a $D$-filter",
        true,
        Check::Set(thm2_8),
    ),
    law(
        "def3.1.obs",
        r"(1)$\Leftrightarrow\forall x:x^0\subseteq\overline x$; (2)$\Leftrightarrow\forall x:\overline x=x^D$",
        false,
        Check::Lattice(def3_1_obs),
    ),
    law(
        "prop3.3.i",
        r"Stonean, $a^0\leq_2\overline a\Rightarrow\overline{\overline a}=\overline{a^0}$",
        true,
        Check::Elem(prop3_3_i),
    ),
    law(
        "prop3.3.ii",
        r"Stonean $\Leftrightarrow\forall x:\overline{\overline x}\subseteq\overline{x^0}$",
        false,
        Check::Lattice(prop3_3_ii),
    ),
    law(
        "lemma3.4",
        r"$D$-Stonean $\Rightarrow a\vee a^0\subseteq D$",
        true,
        Check::Elem(lemma3_4),
    ),
    law(
        "thm3.7",
        r"Stonean $\Rightarrow$ [(2) $\Leftrightarrow\forall F:\overline F=F^D\Leftrightarrow\forall x:\overline x=x^D\Leftrightarrow\forall F,G:(F\cap G\subseteq D\Leftrightarrow F\subseteq\overline G)$]",
        true,
        Check::Lattice(thm3_7),
    ),
    law(
        "c.monotone",
        r"$F\subseteq G\Rightarrow c(F)\subseteq c(G)$",
        true,
        Check::FilterPair(c_monotone),
    ),
    law(
        "c.intersection",
        r"$c(F\cap G)\subseteq c(F)\cap c(G)$",
        false,
        Check::FilterPair(c_intersection),
    ),
    law(
        "c.below_dense",
        r"$F\subseteq D\Rightarrow F\subseteq c(F)$",
        true,
        Check::Filter(c_below_dense),
    ),
    law(
        "lemma4.3",
        r"$\forall x\in F:\overline x\cup F=L\Rightarrow F\subseteq c(F)$",
        true,
        Check::Filter(lemma4_3),
    ),
    law(
        "prop4.5.i",
        r"$F\neq L$, $c(F)\wedge c(F)\subseteq c(F)\Rightarrow c(F)$ is a $D$-filter",
        true,
        Check::Filter(prop4_5_i),
    ),
    law(
        "prop4.5.ii",
        r"$\overline a\wedge\overline b\subseteq\overline{a\wedge b}\Leftrightarrow\forall x,y:[1\in(x^{00}\vee a^{00})\wedge(y^{00}\vee b^{00})\Rightarrow1\in(x\wedge y)^{00}\vee(a\wedge b)^{00}]$",
        false,
        Check::ElemPair(prop4_5_ii),
    ),
    law(
        "prop4.5.iii",
        r"$F\neq L$, $\forall x,y\in c(F):\overline x\wedge\overline y\subseteq\overline{x\wedge y}\Rightarrow c(F)$ is a $D$-filter",
        true,
        Check::Filter(prop4_5_iii),
    ),
    law(
        "thm4.6",
        r"$D$-Stonean, $D\subseteq F\Rightarrow c(F)\subseteq F$",
        true,
        Check::Filter(thm4_6),
    ),
    law(
        "cor4.7",
        r"$D$-Stonean, $D\subseteq F$, $\forall x\in F:\overline x\cup F=L\Rightarrow c(F)=F$",
        true,
        Check::Filter(cor4_7),
    ),
    law(
        "cor4.8.i",
        r"$D\subseteq\overline A$",
        false,
        Check::Set(cor4_8_i),
    ),
    law(
        "cor4.8.ii",
        r"$\overline A=L\Leftrightarrow A\subseteq D$",
        false,
        Check::Set(cor4_8_ii),
    ),
    law(
        "cor4.8.iii",
        r"$\overline{\overline F}=F\Rightarrow D\subseteq F$",
        true,
        Check::Filter(cor4_8_iii),
    ),
    law(
        "closed.intersection",
        r"$\overline{\overline F}=F,\ \overline{\overline G}=G\Rightarrow\overline{\overline{F\cap G}}=F\cap G$",
        true,
        Check::FilterPair(closed_intersection),
    ),
    law(
        "thm5.1.i",
        r"$F\neq L$: $F$ maximal $\Leftrightarrow\forall x\notin F:x^0\cap F\neq\emptyset$",
        false,
        Check::Filter(thm5_1_i),
    ),
    law(
        "thm5.1.ii",
        r"$F$ maximal $\Rightarrow D\subseteq F$",
        true,
        Check::Filter(thm5_1_ii),
    ),
    law(
        "thm5.1.iii",
        r"$F$ maximal, $\forall x,y\notin F,z\in F:[x\wedge z=y\wedge z=0\Rightarrow(x\vee y)\wedge z=0]\Rightarrow F$ prime",
        true,
        Check::Filter(thm5_1_iii),
    ),
    law(
        "thm5.5.i",
        r"$\forall x,y:x^{00}\vee y^{00}\leq_1(x\vee y)^{00}$, $F\neq L$ prime, $D\subseteq F$, $a\notin F\Rightarrow\overline a\subseteq F$",
        true,
        Check::FilterElem(thm5_5_i),
    ),
    law(
        "thm5.5.ii",
        r"$\forall x,y:x^{00}\vee y^{00}\leq_1(x\vee y)^{00}$, $F\neq L$ median, $D\subseteq F$, $a\in F\Rightarrow\overline{\overline a}\subseteq F$",
        true,
        Check::FilterElem(thm5_5_ii),
    ),
    law(
        "thm5.5.ii.prime",
        r"$\forall x,y:x^{00}\vee y^{00}\leq_1(x\vee y)^{00}$, $F\neq L$ median prime, $D\subseteq F$, $a\in F\Rightarrow\overline{\overline a}\subseteq F$",
        true,
        Check::FilterElem(thm5_5_ii_prime),
    ),
    law(
        "thm5.5.iii",
        r"$F\neq L$, $a\in F\Rightarrow a^0\not\subseteq F$",
        false,
        Check::FilterElem(thm5_5_iii),
    ),
    law(
        "thm5.5.iv",
        r"$D$-Stonean, $F\neq L$ prime, $D\subseteq F\Rightarrow(a\in F\Leftrightarrow a^0\not\subseteq F)$",
        true,
        Check::FilterElem(thm5_5_iv),
    ),
    law(
        "thm5.6.i",
        r"$F$ maximal, $c(F)=F\Rightarrow F$ median",
        true,
        Check::Filter(thm5_6_i),
    ),
    law(
        "thm5.6.ii",
        r"$F$ maximal, $\overline F\not\subseteq F\Rightarrow F$ median",
        true,
        Check::Filter(thm5_6_ii),
    ),
    law(
        "thm5.6.iii",
        r"$F$ maximal, $F=\overline{L\setminus F}\Rightarrow F$ median",
        true,
        Check::Filter(thm5_6_iii),
    ),
    law(
        "prop5.7.i",
        r"$D$-Stonean, $F$ median prime, $D\subseteq F$, $a\in F$, $\overline a=\overline b\Rightarrow b\in F$",
        true,
        Check::FilterElemPair(prop5_7_i),
    ),
    law(
        "prop5.7.ii",
        r"$D$-Stonean, $F$ median prime, $a\vee b\in F\Rightarrow\exists c\notin F:\{a\vee c,b\vee c\}\cap D\neq\emptyset$",
        true,
        Check::FilterElemPair(prop5_7_ii),
    ),
];
