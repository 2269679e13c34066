//! Predicate bodies. Notation in trace labels: `*A` is the posterior after
//! revising by `A`, `bel(*A)` its belief set, `[*A]B` the models of
//! `[(Ψ∗A)∗B]`, `Psi` the prior.

use super::{Binding, CheckError, Checker, Flavor, NoTrace, PostulateSpec, Trace, TraceLog};
use crate::operators::agree;

type R = Result<bool, CheckError>;

macro_rules! ids {
    ($($v:ident => $s:literal),* $(,)?) => {
        /// Stable identifier of a registered postulate.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum PostulateId { $($v),* }

        impl PostulateId {
            pub fn as_str(self) -> &'static str {
                match self { $(PostulateId::$v => $s),* }
            }
        }
    };
}

ids! {
    Eq => "eq", C1 => "c1", C2 => "c2", C3 => "c3", C4 => "c4",
    C1s => "c1s", C2s => "c2s", C3s => "c3s", C4s => "c4s",
    P => "p", Ps => "ps", Rec => "rec",
    Success => "success", K7 => "k7", K8 => "k8", Dr => "dr", Do => "do", Di => "di", Df => "df",
    Beta1p => "beta1p", Beta2p => "beta2p", Beta1ps => "beta1ps", Beta2ps => "beta2ps",
    Beta1 => "beta1", Beta2 => "beta2", Beta3 => "beta3", Beta4 => "beta4",
    Beta1s => "beta1s", Beta2s => "beta2s", Beta3s => "beta3s", Beta4s => "beta4s",
    Gamma1 => "gamma1", Gamma2 => "gamma2", Gamma3 => "gamma3", Gamma4 => "gamma4",
    Gamma5 => "gamma5", Gamma6 => "gamma6", Gamma1p => "gamma1p", Gamma2p => "gamma2p",
    Alpha1 => "alpha1", Alpha2 => "alpha2", Alpha3 => "alpha3", Alpha3s => "alpha3s",
    Omega1 => "omega1", Omega2 => "omega2", Omega3 => "omega3",
    Iia => "iia", Sep => "sep", Seps => "seps", Pplus => "pplus", Nonflush => "nonflush",
    Ik3 => "ik3", Ik4 => "ik4", Ipres => "ipres", Ik7 => "ik7", Ik8 => "ik8",
    Idr => "idr", Ido => "ido", Idi => "idi",
    Idf1 => "idf1", Idf2 => "idf2", Idf3 => "idf3", Idf1rtl => "idf1rtl", Idf1ltr => "idf1ltr",
    Wpuplus => "wpuplus", Spuplus => "spuplus",
}

/// Returns `Ok(true)` from the predicate when a premise fails.
macro_rules! given {
    ($t:expr, $label:literal, $cond:expr) => {
        if !$t.note($label, $cond) {
            return Ok(true);
        }
    };
}

fn eq<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, c, d) = (b.s(0), b.s(1), b.s(2), b.s(3));
    given!(t, "A == B", a == bb);
    given!(t, "C == D", c == d);
    Ok(t.note("[*A]C == [*B]D", cx.then(a, c)? == cx.then(bb, d)?))
}

fn c1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x, y in A", a.contains(x) && a.contains(y));
    Ok(t.note("x <=[*A] y iff x <=[Psi] y", cx.post(a)?.leq(x, y) == cx.prior().leq(x, y)))
}

fn c2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x, y not in A", !a.contains(x) && !a.contains(y));
    Ok(t.note("x <=[*A] y iff x <=[Psi] y", cx.post(a)?.leq(x, y) == cx.prior().leq(x, y)))
}

fn c3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "x <[Psi] y", cx.prior().lt(x, y));
    Ok(t.note("x <[*A] y", cx.post(a)?.as_ref().lt(x, y)))
}

fn c4<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "x <=[Psi] y", cx.prior().leq(x, y));
    Ok(t.note("x <=[*A] y", cx.post(a)?.leq(x, y)))
}

fn c1s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "B subset A", bb.is_subset(a));
    Ok(t.note("[*A]B == bel(*B)", cx.then(a, bb)? == cx.bel(bb)?))
}

fn c2s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "B subset ~A", !bb.intersects(a));
    Ok(t.note("[*A]B == bel(*B)", cx.then(a, bb)? == cx.bel(bb)?))
}

fn c3s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*B) subset A", cx.bel(bb)?.is_subset(a));
    Ok(t.note("[*A]B subset A", cx.then(a, bb)?.is_subset(a)))
}

fn c4s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*B) meets A", cx.bel(bb)?.intersects(a));
    Ok(t.note("[*A]B meets A", cx.then(a, bb)?.intersects(a)))
}

fn p<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "x <=[Psi] y", cx.prior().leq(x, y));
    Ok(t.note("x <[*A] y", cx.post(a)?.as_ref().lt(x, y)))
}

fn ps<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*B) meets A", cx.bel(bb)?.intersects(a));
    Ok(t.note("[*A]B subset A", cx.then(a, bb)?.is_subset(a)))
}

fn rec<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "A & B consistent", a.intersects(bb));
    Ok(t.note("[*A]B subset A", cx.then(a, bb)?.is_subset(a)))
}

fn success<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let a = b.s(0);
    Ok(t.note("bel(*A) subset A", cx.bel(a)?.is_subset(a)))
}

fn k7<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    given!(t, "A & C consistent", a.intersects(c));
    Ok(t.note("bel(*A) & C subset bel(*(A&C))", (cx.bel(a)? & c).is_subset(cx.bel(a & c)?)))
}

fn k8<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    given!(t, "A & C consistent", a.intersects(c));
    given!(t, "bel(*A) meets C", cx.bel(a)?.intersects(c));
    Ok(t.note("bel(*(A&C)) subset bel(*A) & C", cx.bel(a & c)?.is_subset(cx.bel(a)? & c)))
}

fn dr<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    let ac = cx.bel(a | c)?;
    let left = t.note("bel(*A) subset bel(*(A|C))", cx.bel(a)?.is_subset(ac));
    Ok(left || t.note("bel(*C) subset bel(*(A|C))", cx.bel(c)?.is_subset(ac)))
}

fn do_<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    Ok(t.note("bel(*(A|C)) subset bel(*A) | bel(*C)", cx.bel(a | c)?.is_subset(cx.bel(a)? | cx.bel(c)?)))
}

fn di<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    let ac = cx.bel(a | c)?;
    given!(t, "bel(*(A|C)) meets A", ac.intersects(a));
    Ok(t.note("bel(*A) subset bel(*(A|C))", cx.bel(a)?.is_subset(ac)))
}

fn df<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c) = (b.s(0), b.s(1));
    let (ac, ba, bc) = (cx.bel(a | c)?, cx.bel(a)?, cx.bel(c)?);
    let i = !t.note("bel(*(A|C)) misses C", !ac.intersects(c)) || t.note("(i) bel(*(A|C)) == bel(*A)", ac == ba);
    let ii = !t.note("bel(*(A|C)) meets A and C", ac.intersects(a) && ac.intersects(c))
        || t.note("(ii) bel(*(A|C)) == bel(*A) | bel(*C)", ac == ba | bc);
    let iii = !t.note("bel(*(A|C)) misses A", !ac.intersects(a)) || t.note("(iii) bel(*(A|C)) == bel(*C)", ac == bc);
    Ok(i && ii && iii)
}

fn beta1p<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("y <=[*C] x", cx.post(c)?.leq(y, x)))
}

fn beta2p<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("y <[*C] x", cx.post(c)?.as_ref().lt(y, x)))
}

fn beta1ps<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, c) = (b.s(0), b.s(1), b.s(2));
    given!(t, "[*A]B not subset A", !cx.then(a, bb)?.is_subset(a));
    Ok(t.note("[*C]B not subset A", !cx.then(c, bb)?.is_subset(a)))
}

fn beta2ps<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, c) = (b.s(0), b.s(1), b.s(2));
    given!(t, "[*A]B misses A", !cx.then(a, bb)?.intersects(a));
    Ok(t.note("[*C]B misses A", !cx.then(c, bb)?.intersects(a)))
}

fn beta1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("y <=[*C] x", cx.post(c)?.leq(y, x)))
}

fn beta2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("y <[*C] x", cx.post(c)?.as_ref().lt(y, x)))
}

fn beta1s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, c) = (b.s(0), b.s(1), b.s(2));
    given!(t, "[*A]B not subset A", !cx.then(a, bb)?.is_subset(a));
    given!(t, "bel(*C) misses B & A", !cx.bel(c)?.intersects(bb & a));
    Ok(t.note("[*C]B not subset A", !cx.then(c, bb)?.is_subset(a)))
}

fn beta2s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, c) = (b.s(0), b.s(1), b.s(2));
    given!(t, "[*A]B misses A", !cx.then(a, bb)?.intersects(a));
    given!(t, "bel(*C) misses B & A", !cx.bel(c)?.intersects(bb & a));
    Ok(t.note("[*C]B misses A", !cx.then(c, bb)?.intersects(a)))
}

fn beta3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "z != y", z != y);
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "z <=[Psi] y", cx.prior().leq(z, y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("z <=[*C] x", cx.post(c)?.leq(z, x)))
}

fn beta4<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "z != y", z != y);
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "z <=[Psi] y", cx.prior().leq(z, y));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("z <[*C] x", cx.post(c)?.as_ref().lt(z, x)))
}

fn alpha1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "z <=[Psi] y", cx.prior().leq(z, y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("z <=[*C] x", cx.post(c)?.leq(z, x)))
}

fn alpha2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "z <=[Psi] y", cx.prior().leq(z, y));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("z <[*C] x", cx.post(c)?.as_ref().lt(z, x)))
}

fn alpha3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "z <[Psi] y", cx.prior().lt(z, y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("z <[*C] x", cx.post(c)?.as_ref().lt(z, x)))
}

fn beta3s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (b1, b2, a, c) = (b.s(0), b.s(1), b.s(2), b.s(3));
    given!(t, "bel(*B1) not subset B2", !cx.bel(b1)?.is_subset(b2));
    given!(t, "[*A]B2 not subset ~B1 | A", !cx.then(a, b2)?.is_subset(!b1 | a));
    given!(t, "bel(*C) misses B2 & A", !cx.bel(c)?.intersects(b2 & a));
    given!(t, "B1 ^ B2 consistent", !(b1 ^ b2).is_empty());
    Ok(t.note("[*C](B1 ^ B2) not subset B2 & A", !cx.then(c, b1 ^ b2)?.is_subset(b2 & a)))
}

fn beta4s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (b1, b2, a, c) = (b.s(0), b.s(1), b.s(2), b.s(3));
    given!(t, "bel(*B1) not subset B2", !cx.bel(b1)?.is_subset(b2));
    given!(t, "[*A]B2 subset B1 & ~A", cx.then(a, b2)?.is_subset(b1 - a));
    given!(t, "bel(*C) misses B2 & A", !cx.bel(c)?.intersects(b2 & a));
    given!(t, "B1 ^ B2 consistent", !(b1 ^ b2).is_empty());
    Ok(t.note("[*C](B1 ^ B2) misses B2 & A", !cx.then(c, b1 ^ b2)?.intersects(b2 & a)))
}

fn alpha3s<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (b1, b2, a, c) = (b.s(0), b.s(1), b.s(2), b.s(3));
    given!(t, "bel(*B1) misses B2", !cx.bel(b1)?.intersects(b2));
    given!(t, "[*A]B2 not subset ~B1 | A", !cx.then(a, b2)?.is_subset(!b1 | a));
    given!(t, "bel(*C) misses B2 & A", !cx.bel(c)?.intersects(b2 & a));
    given!(t, "B1 ^ B2 consistent", !(b1 ^ b2).is_empty());
    Ok(t.note("[*C](B1 ^ B2) misses B2 & A", !cx.then(c, b1 ^ b2)?.intersects(b2 & a)))
}

fn gamma1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("y <=[*(A|C)] x", cx.post(a | c)?.leq(y, x)))
}

fn gamma2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("y <[*(A|C)] x", cx.post(a | c)?.as_ref().lt(y, x)))
}

fn gamma3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A | C", (a | c).contains(x));
    given!(t, "y not in A | C", !(a | c).contains(y));
    given!(t, "y <=[*(A|C)] x", cx.post(a | c)?.leq(y, x));
    Ok(t.note("y <=[*C] x", cx.post(c)?.leq(y, x)))
}

fn gamma4<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x not in min(Psi, C)", !cx.prior_min(c).contains(x));
    given!(t, "x in A | C", (a | c).contains(x));
    given!(t, "y not in A | C", !(a | c).contains(y));
    given!(t, "y <[*(A|C)] x", cx.post(a | c)?.as_ref().lt(y, x));
    Ok(t.note("y <[*C] x", cx.post(c)?.as_ref().lt(y, x)))
}

fn gamma5<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x, y not in A", !a.contains(x) && !a.contains(y));
    given!(t, "y <=[*(A|C)] x", cx.post(a | c)?.leq(y, x));
    Ok(t.note("y <=[*C] x", cx.post(c)?.leq(y, x)))
}

fn gamma6<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "y <[*(A|C)] x", cx.post(a | c)?.as_ref().lt(y, x));
    Ok(t.note("y <[*C] x", cx.post(c)?.as_ref().lt(y, x)))
}

fn gamma1p<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    Ok(t.note("y <=[*(A|C)] x", cx.post(a | c)?.leq(y, x)))
}

fn gamma2p<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    Ok(t.note("y <[*(A|C)] x", cx.post(a | c)?.as_ref().lt(y, x)))
}

fn omega1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*(A|B)) meets A", cx.bel(a | bb)?.intersects(a));
    given!(t, "[*A]B not subset A", !cx.then(a, bb)?.is_subset(a));
    Ok(t.note("[*B]A not subset B", !cx.then(bb, a)?.is_subset(bb)))
}

fn omega2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*(A|B)) meets A", cx.bel(a | bb)?.intersects(a));
    given!(t, "[*A]B misses A", !cx.then(a, bb)?.intersects(a));
    Ok(t.note("[*B]A misses B", !cx.then(bb, a)?.intersects(bb)))
}

fn omega3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    given!(t, "bel(*(A|B)) misses B", !cx.bel(a | bb)?.intersects(bb));
    given!(t, "[*A]B not subset A", !cx.then(a, bb)?.is_subset(a));
    Ok(t.note("[*B]A misses B", !cx.then(bb, a)?.intersects(bb)))
}

fn iia<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "A and B agree on x, y", agree(a, bb, x, y));
    Ok(t.note("x <=[*A] y iff x <=[*B] y", cx.post(a)?.leq(x, y) == cx.post(bb)?.leq(x, y)))
}

fn sep<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, x, y) = (b.s(0), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    Ok(t.note("x <[*A] y or y <[*A] x", !cx.post(a)?.equiv(x, y)))
}

fn seps<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    let m = cx.then(a, bb)?;
    let miss = t.note("[*A]B misses A", !m.intersects(a));
    Ok(miss || t.note("[*A]B subset A", m.is_subset(a)))
}

fn pplus<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y) = (b.s(0), b.s(1), b.w(0), b.w(1));
    given!(t, "x in A", a.contains(x));
    given!(t, "y not in A", !a.contains(y));
    given!(t, "x <=[*(A|C)] y", cx.post(a | c)?.leq(x, y));
    Ok(t.note("x <[*A] y", cx.post(a)?.as_ref().lt(x, y)))
}

fn nonflush<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (x, y) = (b.w(0), b.w(1));
    let p = cx.poi().ok_or(CheckError::NotApplicable(PostulateId::Nonflush))?;
    Ok(t.note("plus(x) != minus(y)", p.plus(x) != p.minus(y)))
}

fn ik3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    Ok(t.note("bel(*B) & A subset [*A]B", (cx.bel(bb)? & a).is_subset(cx.then(a, bb)?)))
}

fn ik4<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    let bel = cx.bel(bb)?;
    given!(t, "bel(*B) meets A", bel.intersects(a));
    Ok(t.note("[*A]B subset bel(*B) & A", cx.then(a, bb)?.is_subset(bel & a)))
}

fn ipres<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, bb) = (b.s(0), b.s(1));
    let bel = cx.bel(bb)?;
    given!(t, "bel(*B) meets A", bel.intersects(a));
    Ok(t.note("[*A]B subset bel(*B)", cx.then(a, bb)?.is_subset(bel)))
}

fn ik7<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    given!(t, "A & C consistent", a.intersects(c));
    Ok(t.note("[*A]B & A & C subset [*(A&C)]B", (cx.then(a, bb)? & a & c).is_subset(cx.then(a & c, bb)?)))
}

fn ik8<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let m = cx.then(a, bb)? & a & c;
    given!(t, "[*A]B meets A & C", !m.is_empty());
    Ok(t.note("[*(A&C)]B subset [*A]B & A & C", cx.then(a & c, bb)?.is_subset(m)))
}

fn idr<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    let left = t.note("[*A]B subset [*(A|C)]B", cx.then(a, bb)?.is_subset(ac));
    Ok(left || t.note("[*C]B subset [*(A|C)]B", cx.then(c, bb)?.is_subset(ac)))
}

fn ido<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    Ok(t.note("[*(A|C)]B subset [*A]B | [*C]B", cx.then(a | c, bb)?.is_subset(cx.then(a, bb)? | cx.then(c, bb)?)))
}

fn idi<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B meets A", ac.intersects(a));
    Ok(t.note("[*A]B subset [*(A|C)]B", cx.then(a, bb)?.is_subset(ac)))
}

fn idf1<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B misses C", !ac.intersects(c));
    Ok(t.note("[*(A|C)]B == [*A]B", ac == cx.then(a, bb)?))
}

fn idf2<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B meets A", ac.intersects(a));
    given!(t, "[*(A|C)]B meets C", ac.intersects(c));
    Ok(t.note("[*(A|C)]B == [*A]B | [*C]B", ac == cx.then(a, bb)? | cx.then(c, bb)?))
}

fn idf3<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B misses A", !ac.intersects(a));
    Ok(t.note("[*(A|C)]B == [*C]B", ac == cx.then(c, bb)?))
}

fn idf1rtl<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B misses C", !ac.intersects(c));
    Ok(t.note("[*(A|C)]B subset [*A]B", ac.is_subset(cx.then(a, bb)?)))
}

fn idf1ltr<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, bb) = (b.s(0), b.s(1), b.s(2));
    let ac = cx.then(a | c, bb)?;
    given!(t, "[*(A|C)]B misses C", !ac.intersects(c));
    Ok(t.note("[*A]B subset [*(A|C)]B", cx.then(a, bb)?.is_subset(ac)))
}

fn wpuplus<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "y <=[*A] x", cx.post(a)?.leq(y, x));
    given!(t, "z <=[*C] x", cx.post(c)?.leq(z, x));
    let ac = cx.post(a | c)?;
    let left = t.note("y <=[*(A|C)] x", ac.leq(y, x));
    Ok(left || t.note("z <=[*(A|C)] x", ac.leq(z, x)))
}

fn spuplus<T: Trace>(cx: &Checker, b: &Binding, t: &mut T) -> R {
    let (a, c, x, y, z) = (b.s(0), b.s(1), b.w(0), b.w(1), b.w(2));
    given!(t, "y <[*A] x", cx.post(a)?.as_ref().lt(y, x));
    given!(t, "z <[*C] x", cx.post(c)?.as_ref().lt(z, x));
    let ac = cx.post(a | c)?;
    let left = t.note("y <[*(A|C)] x", ac.as_ref().lt(y, x));
    Ok(left || t.note("z <[*(A|C)] x", ac.as_ref().lt(z, x)))
}

macro_rules! registry {
    ($($id:ident, $label:literal, [$($s:literal),*], [$($w:literal),*], $flavor:ident, $f:ident;)*) => {
        pub(super) static REGISTRY: &[PostulateSpec] = &[$(
            PostulateSpec {
                id: PostulateId::$id,
                label: $label,
                sets: &[$($s),*],
                worlds: &[$($w),*],
                flavor: Flavor::$flavor,
                fast: $f::<NoTrace>,
                traced: $f::<TraceLog>,
            }
        ),*];
    };
}

registry! {
    Eq, "Eq", ["A", "B", "C", "D"], [], Syntactic, eq;
    C1, "C1⪯", ["A"], ["x", "y"], Semantic, c1;
    C2, "C2⪯", ["A"], ["x", "y"], Semantic, c2;
    C3, "C3⪯", ["A"], ["x", "y"], Semantic, c3;
    C4, "C4⪯", ["A"], ["x", "y"], Semantic, c4;
    C1s, "C1", ["A", "B"], [], Syntactic, c1s;
    C2s, "C2", ["A", "B"], [], Syntactic, c2s;
    C3s, "C3", ["A", "B"], [], Syntactic, c3s;
    C4s, "C4", ["A", "B"], [], Syntactic, c4s;
    P, "P⪯", ["A"], ["x", "y"], Semantic, p;
    Ps, "P", ["A", "B"], [], Syntactic, ps;
    Rec, "Rec", ["A", "B"], [], Syntactic, rec;
    Success, "Success", ["A"], [], Syntactic, success;
    K7, "K*7", ["A", "C"], [], Syntactic, k7;
    K8, "K*8", ["A", "C"], [], Syntactic, k8;
    Dr, "DR", ["A", "C"], [], Syntactic, dr;
    Do, "DO", ["A", "C"], [], Syntactic, do_;
    Di, "DI", ["A", "C"], [], Syntactic, di;
    Df, "DF", ["A", "C"], [], Syntactic, df;
    Beta1p, "β1⁺⪯", ["A", "C"], ["x", "y"], Semantic, beta1p;
    Beta2p, "β2⁺⪯", ["A", "C"], ["x", "y"], Semantic, beta2p;
    Beta1ps, "β1⁺", ["A", "B", "C"], [], Syntactic, beta1ps;
    Beta2ps, "β2⁺", ["A", "B", "C"], [], Syntactic, beta2ps;
    Beta1, "β1⪯", ["A", "C"], ["x", "y"], Semantic, beta1;
    Beta2, "β2⪯", ["A", "C"], ["x", "y"], Semantic, beta2;
    Beta3, "β3⪯", ["A", "C"], ["x", "y", "z"], Semantic, beta3;
    Beta4, "β4⪯", ["A", "C"], ["x", "y", "z"], Semantic, beta4;
    Beta1s, "β1", ["A", "B", "C"], [], Syntactic, beta1s;
    Beta2s, "β2", ["A", "B", "C"], [], Syntactic, beta2s;
    Beta3s, "β3", ["B1", "B2", "A", "C"], [], Syntactic, beta3s;
    Beta4s, "β4", ["B1", "B2", "A", "C"], [], Syntactic, beta4s;
    Gamma1, "γ1⪯", ["A", "C"], ["x", "y"], Semantic, gamma1;
    Gamma2, "γ2⪯", ["A", "C"], ["x", "y"], Semantic, gamma2;
    Gamma3, "γ3⪯", ["A", "C"], ["x", "y"], Semantic, gamma3;
    Gamma4, "γ4⪯", ["A", "C"], ["x", "y"], Semantic, gamma4;
    Gamma5, "γ5⪯", ["A", "C"], ["x", "y"], Semantic, gamma5;
    Gamma6, "γ6⪯", ["A", "C"], ["x", "y"], Semantic, gamma6;
    Gamma1p, "γ1⁺⪯", ["A", "C"], ["x", "y"], Semantic, gamma1p;
    Gamma2p, "γ2⁺⪯", ["A", "C"], ["x", "y"], Semantic, gamma2p;
    Alpha1, "α1⪯", ["A", "C"], ["x", "y", "z"], Semantic, alpha1;
    Alpha2, "α2⪯", ["A", "C"], ["x", "y", "z"], Semantic, alpha2;
    Alpha3, "α3⪯", ["A", "C"], ["x", "y", "z"], Semantic, alpha3;
    Alpha3s, "α3", ["B1", "B2", "A", "C"], [], Syntactic, alpha3s;
    Omega1, "Ω1", ["A", "B"], [], Syntactic, omega1;
    Omega2, "Ω2", ["A", "B"], [], Syntactic, omega2;
    Omega3, "Ω3", ["A", "B"], [], Syntactic, omega3;
    Iia, "IIA", ["A", "B"], ["x", "y"], Semantic, iia;
    Sep, "Sep⪯", ["A"], ["x", "y"], Semantic, sep;
    Seps, "Sep", ["A", "B"], [], Syntactic, seps;
    Pplus, "P+⪯", ["A", "C"], ["x", "y"], Semantic, pplus;
    Nonflush, "Non-Flush", [], ["x", "y"], Semantic, nonflush;
    Ik3, "iK3", ["A", "B"], [], Syntactic, ik3;
    Ik4, "iK4", ["A", "B"], [], Syntactic, ik4;
    Ipres, "iPres", ["A", "B"], [], Syntactic, ipres;
    Ik7, "iK7", ["A", "C", "B"], [], Syntactic, ik7;
    Ik8, "iK8", ["A", "C", "B"], [], Syntactic, ik8;
    Idr, "iDR", ["A", "C", "B"], [], Syntactic, idr;
    Ido, "iDO", ["A", "C", "B"], [], Syntactic, ido;
    Idi, "iDI", ["A", "C", "B"], [], Syntactic, idi;
    Idf1, "iDF(i)", ["A", "C", "B"], [], Syntactic, idf1;
    Idf2, "iDF(ii)", ["A", "C", "B"], [], Syntactic, idf2;
    Idf3, "iDF(iii)", ["A", "C", "B"], [], Syntactic, idf3;
    Idf1rtl, "iDF(i) right-to-left", ["A", "C", "B"], [], Syntactic, idf1rtl;
    Idf1ltr, "iDF(i) left-to-right", ["A", "C", "B"], [], Syntactic, idf1ltr;
    Wpuplus, "WPU+", ["A", "C"], ["x", "y", "z"], Semantic, wpuplus;
    Spuplus, "SPU+", ["A", "C"], ["x", "y", "z"], Semantic, spuplus;
}
