//! Symbolic verification of the relation families satisfied by the
//! Party-Hecke algebra and by its alternative generating sets.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{enumerate_permutations, Permutation, SetPartition};
use crate::error::{AlgebraError, Result};
use crate::field::RationalFunctions;
use crate::report::{RelationCheck, RelationReport};
use crate::scalar::Scalar;

use super::{AlgebraElement, PartyHecke};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Defining,
    Dual,
    Lemmas,
    HPresentation,
    TPresentation,
    BtImage,
    Virtual,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Defining,
        Suite::Dual,
        Suite::Lemmas,
        Suite::HPresentation,
        Suite::TPresentation,
        Suite::BtImage,
        Suite::Virtual,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Defining => "defining",
            Suite::Dual => "dual",
            Suite::Lemmas => "lemmas",
            Suite::HPresentation => "H-presentation",
            Suite::TPresentation => "T-presentation",
            Suite::BtImage => "bt-image",
            Suite::Virtual => "virtual",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| AlgebraError::Parse(format!("unknown suite {s:?}")))
    }
}

/// A parameter choice `V_i = x H_i + y F_i` for the virtual braid check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualPoint {
    pub x: i64,
    pub y: Scalar,
}

impl VirtualPoint {
    /// `x = 1, y = (1 ± a)/q^2` and `x = -1, y = -(1 ± a)/q^2`.
    pub fn published() -> Vec<Self> {
        let mk = |x: i64, y: &str| Self {
            x,
            y: y.parse().expect("valid scalar"),
        };
        vec![
            mk(1, "(1 + a)/q^2"),
            mk(1, "(1 - a)/q^2"),
            mk(-1, "-(1 + a)/q^2"),
            mk(-1, "-(1 - a)/q^2"),
        ]
    }

    /// The values of `y` for which `V_i^2 = 1`: `q^2 y = x(±1 - a)`.
    pub fn involutive() -> Vec<Self> {
        let mk = |x: i64, y: &str| Self {
            x,
            y: y.parse().expect("valid scalar"),
        };
        vec![
            mk(1, "(1 - a)/q^2"),
            mk(1, "(-1 - a)/q^2"),
            mk(-1, "-(1 - a)/q^2"),
            mk(-1, "-(-1 - a)/q^2"),
        ]
    }
}

impl fmt::Display for VirtualPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}, y={}", self.x, self.y)
    }
}

struct Ctx {
    ph: PartyHecke<RationalFunctions>,
    report: RelationReport,
}

fn s(x: &str) -> Scalar {
    x.parse().expect("valid scalar literal")
}

impl Ctx {
    fn n(&self) -> usize {
        self.ph.n()
    }

    fn idx(&self) -> std::ops::Range<usize> {
        1..self.n()
    }

    /// Ordered pairs `(i, j)` with `|i - j| = 1`.
    fn adjacent(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.idx() {
            for j in self.idx() {
                if i.abs_diff(j) == 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Ordered pairs with `|i - j| > 1`.
    fn far(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.idx() {
            for j in self.idx() {
                if i.abs_diff(j) > 1 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn prod(&self, xs: &[&AlgebraElement]) -> Result<AlgebraElement> {
        self.ph.product(xs)
    }

    fn lin(&self, parts: &[(Scalar, &AlgebraElement)]) -> AlgebraElement {
        self.ph.combine(parts)
    }

    fn one(&self) -> AlgebraElement {
        self.ph.one()
    }

    fn eq(&mut self, name: String, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        let holds = lhs == rhs;
        let mut c = RelationCheck::new(name, holds);
        if !holds {
            c = c.with_detail(format!("lhs - rhs = {}", self.ph.sub(lhs, rhs)));
        }
        self.report.push(c);
    }

    fn diag(&mut self, name: String, lhs: &AlgebraElement, rhs: &AlgebraElement) {
        let holds = lhs == rhs;
        let detail = (!holds).then(|| format!("lhs - rhs = {}", self.ph.sub(lhs, rhs)));
        self.report.push(RelationCheck::diagnostic(name, holds, detail));
    }
}

/// Evaluate one suite symbolically over Q(a, q).
pub fn verify_suite(suite: Suite, n: usize) -> Result<RelationReport> {
    if !(2..=5).contains(&n) {
        return Err(AlgebraError::BoundExceeded(format!(
            "relation suites run for 2 <= n <= 5, got {n}"
        )));
    }
    let mut ctx = Ctx {
        ph: PartyHecke::symbolic(n),
        report: RelationReport::new(suite.name(), n),
    };
    match suite {
        Suite::Defining => defining(&mut ctx)?,
        Suite::Dual => dual(&mut ctx)?,
        Suite::Lemmas => lemmas(&mut ctx)?,
        Suite::HPresentation => h_presentation(&mut ctx)?,
        Suite::TPresentation => t_presentation(&mut ctx)?,
        Suite::BtImage => bt_image(&mut ctx)?,
        Suite::Virtual => virtual_braid(&mut ctx)?,
    }
    Ok(ctx.report)
}

fn defining(c: &mut Ctx) -> Result<()> {
    let ph = &c.ph;
    let g: Vec<_> = c.idx().map(|i| ph.g(i)).collect::<Result<_>>()?;
    let f: Vec<_> = c.idx().map(|i| ph.f(i)).collect::<Result<_>>()?;
    let gi: Vec<_> = c.idx().map(|i| ph.g_inv(i)).collect::<Result<_>>()?;
    let one = c.one();
    for i in c.idx() {
        let (g, f, gi) = (&g[i - 1], &f[i - 1], &gi[i - 1]);
        let lhs = c.prod(&[g, g])?;
        let rhs = c.lin(&[(s("p*q^2"), &one), (s("p*(p - 1)"), f)]);
        c.eq(format!("G{i}^2 = pq^2 + p(p-1)F{i}"), &lhs, &rhs);
        let pqf = c.lin(&[(s("p*q"), f)]);
        let lhs = c.prod(&[g, f])?;
        c.eq(format!("G{i}F{i} = pqF{i}"), &lhs, &pqf);
        let lhs = c.prod(&[f, g])?;
        c.eq(format!("F{i}G{i} = pqF{i}"), &lhs, &pqf);
        let lhs = c.prod(&[f, f])?;
        let rhs = c.lin(&[(s("q^2"), f)]);
        c.eq(format!("F{i}^2 = q^2F{i}"), &lhs, &rhs);
        let lhs = c.prod(&[gi, g])?;
        c.eq(format!("Ginv{i}G{i} = 1"), &lhs, &one);
        let lhs = c.prod(&[g, gi])?;
        c.eq(format!("G{i}Ginv{i} = 1"), &lhs, &one);
    }
    for i in c.idx() {
        for j in c.idx() {
            if i < j {
                let lhs = c.prod(&[&f[i - 1], &f[j - 1]])?;
                let rhs = c.prod(&[&f[j - 1], &f[i - 1]])?;
                c.eq(format!("F{i}F{j} = F{j}F{i}"), &lhs, &rhs);
            }
        }
    }
    for (i, j) in c.far() {
        if i < j {
            let lhs = c.prod(&[&g[i - 1], &g[j - 1]])?;
            let rhs = c.prod(&[&g[j - 1], &g[i - 1]])?;
            c.eq(format!("G{i}G{j} = G{j}G{i}"), &lhs, &rhs);
        }
        let lhs = c.prod(&[&g[i - 1], &f[j - 1]])?;
        let rhs = c.prod(&[&f[j - 1], &g[i - 1]])?;
        c.eq(format!("G{i}F{j} = F{j}G{i}"), &lhs, &rhs);
    }
    for (i, j) in c.adjacent() {
        let (gi_, gj, fi, fj) = (&g[i - 1], &g[j - 1], &f[i - 1], &f[j - 1]);
        let lhs = c.prod(&[gi_, gj, gi_])?;
        let rhs = c.prod(&[gj, gi_, gj])?;
        c.eq(format!("G{i}G{j}G{i} = G{j}G{i}G{j}"), &lhs, &rhs);
        let misprint = c.prod(&[gj, gj, gi_])?;
        c.diag(format!("G{i}G{j}G{i} = G{j}G{j}G{i} (misprinted braid)"), &lhs, &misprint);
        let lhs = c.prod(&[gi_, gj, fi])?;
        let rhs = c.prod(&[fj, gi_, gj])?;
        c.eq(format!("G{i}G{j}F{i} = F{j}G{i}G{j}"), &lhs, &rhs);
    }
    Ok(())
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn dual(c: &mut Ctx) -> Result<()> {
    let n = c.n();
    let one = c.one();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut fij = std::collections::HashMap::new();
    let mut gij = std::collections::HashMap::new();
    for &(i, j) in &pairs {
        fij.insert((i, j), c.ph.f_pair(i, j)?);
        gij.insert((i, j), c.ph.g_pair(i, j)?);
    }
    for &(i, j) in &pairs {
        let (f, g) = (&fij[&(i, j)], &gij[&(i, j)]);
        let basis = c
            .ph
            .pair(&SetPartition::pair(n, i, j)?, &Permutation::identity(n), &Scalar::one())?;
        c.eq(format!("F({i},{j}) = F_{{{i},{j}}}"), f, &basis);
        let lhs = c.prod(&[g, g])?;
        let rhs = c.lin(&[(s("p*q^2"), &one), (s("p*(p - 1)"), f)]);
        c.eq(format!("G({i},{j})^2 = pq^2 + p(p-1)F({i},{j})"), &lhs, &rhs);
        for &(k, l) in &pairs {
            let t = Permutation::transposition(i, j, n)?;
            let (k2, l2) = sorted(t.apply(k), t.apply(l));
            let lhs = c.prod(&[g, &fij[&(k, l)]])?;
            let rhs = c.prod(&[&fij[&(k2, l2)], g])?;
            c.eq(
                format!("G({i},{j})F({k},{l}) = F({k2},{l2})G({i},{j})"),
                &lhs,
                &rhs,
            );
        }
        let pqf = c.lin(&[(s("p*q"), f)]);
        let lhs = c.prod(&[g, f])?;
        c.eq(format!("G({i},{j})F({i},{j}) = pqF({i},{j})"), &lhs, &pqf);
        let lhs = c.prod(&[f, g])?;
        c.eq(format!("F({i},{j})G({i},{j}) = pqF({i},{j})"), &lhs, &pqf);
        let inv = c.lin(&[(s("p^-1*q^-2"), g), (s("q^-3*(p^-1 - 1)"), f)]);
        let lhs = c.prod(&[&inv, g])?;
        c.eq(format!("G({i},{j})^-1 = p^-1q^-2G({i},{j}) + q^-3(p^-1-1)F({i},{j})"), &lhs, &one);
        let lhs = c.prod(&[g, &inv])?;
        c.eq(format!("G({i},{j})G({i},{j})^-1 = 1"), &lhs, &one);
    }
    // G_k F_{i,j} = F_{s_k(i), s_k(j)} G_k.
    for k in c.idx() {
        let g = c.ph.g(k)?;
        let sk = Permutation::elementary(n, k)?;
        for &(i, j) in &pairs {
            let (i2, j2) = sorted(sk.apply(i), sk.apply(j));
            let lhs = c.prod(&[&g, &fij[&(i, j)]])?;
            let rhs = c.prod(&[&fij[&(i2, j2)], &g])?;
            c.eq(format!("G{k}F({i},{j}) = F({i2},{j2})G{k}"), &lhs, &rhs);
        }
    }
    for &(a, b) in &pairs {
        for &(k, l) in &pairs {
            let lhs = c.prod(&[&fij[&(a, b)], &fij[&(k, l)]])?;
            let rhs = c.prod(&[&fij[&(k, l)], &fij[&(a, b)]])?;
            if (a, b) < (k, l) {
                c.eq(format!("F({a},{b})F({k},{l}) = F({k},{l})F({a},{b})"), &lhs, &rhs);
            }
        }
    }
    // F_{i,j} G_t G_k G_t^{-1} = pq F_{i,j} whenever t s_k t^{-1} = s_{i,j}.
    let perms: Vec<Permutation> = enumerate_permutations(n)?.collect();
    for &(i, j) in &pairs {
        let target = Permutation::transposition(i, j, n)?;
        let pqf = c.lin(&[(s("p*q"), &fij[&(i, j)])]);
        let mut count = 0;
        let mut all = true;
        let mut first_failure = None;
        for t in &perms {
            for k in c.idx() {
                let sk = Permutation::elementary(n, k)?;
                let conj = t.compose(&sk)?.compose(&t.inverse())?;
                if conj != target {
                    continue;
                }
                count += 1;
                let gt = c.ph.g_perm(t);
                let gti = c.ph.g_perm_inv(t)?;
                let lhs = c.prod(&[&fij[&(i, j)], &gt, &c.ph.g(k)?, &gti])?;
                if lhs != pqf {
                    all = false;
                    first_failure.get_or_insert_with(|| format!("t = {t}, k = {k}"));
                }
            }
        }
        let mut chk = RelationCheck::new(
            format!("F({i},{j})G_tG_kG_t^-1 = pqF({i},{j}) over {count} pairs (t, k)"),
            all && count > 0,
        );
        if let Some(d) = first_failure {
            chk = chk.with_detail(format!("fails at {d}"));
        }
        c.report.push(chk);
    }
    Ok(())
}

fn lemmas(c: &mut Ctx) -> Result<()> {
    for (i, j) in c.adjacent() {
        let ph = &c.ph;
        let (gi, gj, fi, fj) = (ph.g(i)?, ph.g(j)?, ph.f(i)?, ph.f(j)?);
        let gj_inv = ph.g_inv(j)?;
        let a = c.prod(&[&gi, &fj, &fi])?;
        let b = c.prod(&[&fj, &gi, &fj])?;
        let d = c.prod(&[&fi, &fj, &gi])?;
        c.eq(format!("G{i}F{j}F{i} = F{j}G{i}F{j}"), &a, &b);
        c.eq(format!("F{j}G{i}F{j} = F{i}F{j}G{i}"), &b, &d);
        let lhs = c.prod(&[&gi, &gj_inv, &fi])?;
        let rhs = c.prod(&[&fj, &gi, &gj_inv])?;
        c.eq(format!("G{i}Ginv{j}F{i} = F{j}G{i}Ginv{j}"), &lhs, &rhs);
        // Intermediate steps of the derivation, with the unnamed scalar equal to pq.
        let step = c.prod(&[&gi, &gj, &fi, &gj_inv, &fj])?;
        c.eq(format!("F{j}G{i}F{j} = G{i}G{j}F{i}Ginv{j}F{j}"), &b, &step);
        let gg_ff = c.prod(&[&gi, &gj, &fi, &fj])?;
        let scaled = c.lin(&[(s("(p*q)^-1"), &gg_ff)]);
        c.eq(format!("G{i}G{j}F{i}Ginv{j}F{j} = (pq)^-1 G{i}G{j}F{i}F{j}"), &step, &scaled);
        let ff = c.prod(&[&fi, &fj])?;
        let pqff = c.lin(&[(s("p*q"), &ff)]);
        c.eq(format!("G{i}F{j}F{i} = pqF{i}F{j}"), &a, &pqff);
    }
    Ok(())
}

fn h_presentation(c: &mut Ctx) -> Result<()> {
    let ph = &c.ph;
    let h: Vec<_> = c.idx().map(|i| ph.h(i)).collect::<Result<_>>()?;
    let f: Vec<_> = c.idx().map(|i| ph.f(i)).collect::<Result<_>>()?;
    let one = c.one();
    for i in c.idx() {
        let (h, f) = (&h[i - 1], &f[i - 1]);
        let lhs = c.prod(&[h, h])?;
        let rhs = c.lin(&[(Scalar::one(), &one), (s("q^-2*(p - 1)"), f)]);
        c.eq(format!("H{i}^2 = 1 + q^-2(p-1)F{i}"), &lhs, &rhs);
        let af = c.lin(&[(Scalar::a(), f)]);
        let lhs = c.prod(&[h, f])?;
        c.eq(format!("H{i}F{i} = aF{i}"), &lhs, &af);
        let lhs = c.prod(&[f, h])?;
        c.eq(format!("F{i}H{i} = aF{i}"), &lhs, &af);
        let lhs = c.prod(&[f, f])?;
        let rhs = c.lin(&[(s("q^2"), f)]);
        c.eq(format!("F{i}^2 = q^2F{i}"), &lhs, &rhs);
        let inv = c.lin(&[(Scalar::one(), h), (s("-q^-2*(a - a^-1)"), f)]);
        let lhs = c.prod(&[h, &inv])?;
        c.eq(format!("H{i}(H{i} - q^-2(a - a^-1)F{i}) = 1"), &lhs, &one);
        let lhs = c.prod(&[&inv, h])?;
        c.eq(format!("(H{i} - q^-2(a - a^-1)F{i})H{i} = 1"), &lhs, &one);
    }
    for i in c.idx() {
        for j in c.idx() {
            if i < j {
                let lhs = c.prod(&[&f[i - 1], &f[j - 1]])?;
                let rhs = c.prod(&[&f[j - 1], &f[i - 1]])?;
                c.eq(format!("F{i}F{j} = F{j}F{i}"), &lhs, &rhs);
            }
        }
    }
    for (i, j) in c.far() {
        if i < j {
            let lhs = c.prod(&[&h[i - 1], &h[j - 1]])?;
            let rhs = c.prod(&[&h[j - 1], &h[i - 1]])?;
            c.eq(format!("H{i}H{j} = H{j}H{i}"), &lhs, &rhs);
        }
        let lhs = c.prod(&[&h[i - 1], &f[j - 1]])?;
        let rhs = c.prod(&[&f[j - 1], &h[i - 1]])?;
        c.eq(format!("H{i}F{j} = F{j}H{i}"), &lhs, &rhs);
    }
    for (i, j) in c.adjacent() {
        let (hi, hj, fi, fj) = (&h[i - 1], &h[j - 1], &f[i - 1], &f[j - 1]);
        let lhs = c.prod(&[hi, hj, hi])?;
        let rhs = c.prod(&[hj, hi, hj])?;
        c.eq(format!("H{i}H{j}H{i} = H{j}H{i}H{j}"), &lhs, &rhs);
        let lhs = c.prod(&[hi, hj, fi])?;
        let rhs = c.prod(&[fj, hi, hj])?;
        c.eq(format!("H{i}H{j}F{i} = F{j}H{i}H{j}"), &lhs, &rhs);
    }
    Ok(())
}

fn t_presentation(c: &mut Ctx) -> Result<()> {
    let ph = &c.ph;
    let t: Vec<_> = c.idx().map(|i| ph.t(i)).collect::<Result<_>>()?;
    let f: Vec<_> = c.idx().map(|i| ph.f(i)).collect::<Result<_>>()?;
    let four = Scalar::int(4);
    let m1 = Scalar::int(-1);
    let m2 = Scalar::int(-2);
    for i in c.idx() {
        let (ti, fi) = (&t[i - 1], &f[i - 1]);
        let lhs = c.prod(&[ti, ti])?;
        c.eq(format!("T{i}^2 = T{i}"), &lhs, ti);
        let lhs = c.prod(&[fi, fi])?;
        let rhs = c.lin(&[(s("q^2"), fi)]);
        c.eq(format!("F{i}^2 = q^2F{i}"), &lhs, &rhs);
        let lhs = c.prod(&[ti, fi])?;
        c.eq(format!("T{i}F{i} = F{i}"), &lhs, fi);
        let lhs = c.prod(&[fi, ti])?;
        c.eq(format!("F{i}T{i} = F{i}"), &lhs, fi);
    }
    for i in c.idx() {
        for j in c.idx() {
            if i < j {
                let lhs = c.prod(&[&f[i - 1], &f[j - 1]])?;
                let rhs = c.prod(&[&f[j - 1], &f[i - 1]])?;
                c.eq(format!("F{i}F{j} = F{j}F{i}"), &lhs, &rhs);
            }
        }
    }
    for (i, j) in c.far() {
        if i < j {
            let lhs = c.prod(&[&t[i - 1], &t[j - 1]])?;
            let rhs = c.prod(&[&t[j - 1], &t[i - 1]])?;
            c.eq(format!("T{i}T{j} = T{j}T{i}"), &lhs, &rhs);
        }
        let lhs = c.prod(&[&t[i - 1], &f[j - 1]])?;
        let rhs = c.prod(&[&f[j - 1], &t[i - 1]])?;
        c.eq(format!("T{i}F{j} = F{j}T{i}"), &lhs, &rhs);
    }
    for (i, j) in c.adjacent() {
        let (ti, tj, fi, fj) = (&t[i - 1], &t[j - 1], &f[i - 1], &f[j - 1]);
        let tij = c.prod(&[ti, tj, ti])?;
        let tji = c.prod(&[tj, ti, tj])?;
        let lhs = c.lin(&[(four.clone(), &tij), (m1.clone(), ti)]);
        let rhs = c.lin(&[(four.clone(), &tji), (m1.clone(), tj)]);
        c.eq(format!("4T{i}T{j}T{i} - T{i} = 4T{j}T{i}T{j} - T{j}"), &lhs, &rhs);
        let ttf = c.prod(&[ti, tj, fi])?;
        let tf = c.prod(&[tj, fi])?;
        let ftt = c.prod(&[fj, ti, tj])?;
        let ft = c.prod(&[fj, ti])?;
        let lhs = c.lin(&[(four.clone(), &ttf), (m2.clone(), &tf), (m1.clone(), fi)]);
        let rhs = c.lin(&[(four.clone(), &ftt), (m2.clone(), &ft), (m1.clone(), fj)]);
        c.eq(
            format!("4T{i}T{j}F{i} - 2T{j}F{i} - F{i} = 4F{j}T{i}T{j} - 2F{j}T{i} - F{j}"),
            &lhs,
            &rhs,
        );
    }
    Ok(())
}

fn bt_image(c: &mut Ctx) -> Result<()> {
    let ph = &c.ph;
    let g: Vec<_> = c.idx().map(|i| ph.h(i)).collect::<Result<_>>()?;
    let e: Vec<_> = c
        .idx()
        .map(|i| Ok(ph.scale(&ph.f(i)?, &s("q^-2"))))
        .collect::<Result<_>>()?;
    let one = c.one();
    let am1 = s("a - 1");
    for i in c.idx() {
        let (g, e) = (&g[i - 1], &e[i - 1]);
        let lhs = c.prod(&[g, e])?;
        let rhs = c.prod(&[e, g])?;
        c.eq(format!("g{i}e{i} = e{i}g{i}"), &lhs, &rhs);
        let ae = c.lin(&[(Scalar::a(), e)]);
        c.eq(format!("g{i}e{i} = a e{i}"), &lhs, &ae);
        let lhs = c.prod(&[e, e])?;
        c.eq(format!("e{i}^2 = e{i}"), &lhs, e);
        let eg = c.prod(&[e, g])?;
        let lhs = c.prod(&[g, g])?;
        let rhs = c.lin(&[(Scalar::one(), &one), (am1.clone(), e), (am1.clone(), &eg)]);
        c.eq(format!("g{i}^2 = 1 + (a-1)e{i} + (a-1)e{i}g{i}"), &lhs, &rhs);
    }
    for i in c.idx() {
        for j in c.idx() {
            if i < j {
                let lhs = c.prod(&[&e[i - 1], &e[j - 1]])?;
                let rhs = c.prod(&[&e[j - 1], &e[i - 1]])?;
                c.eq(format!("e{i}e{j} = e{j}e{i}"), &lhs, &rhs);
            }
        }
    }
    for (i, j) in c.far() {
        let lhs = c.prod(&[&g[i - 1], &e[j - 1]])?;
        let rhs = c.prod(&[&e[j - 1], &g[i - 1]])?;
        c.eq(format!("g{i}e{j} = e{j}g{i}"), &lhs, &rhs);
        if i < j {
            let lhs = c.prod(&[&g[i - 1], &g[j - 1]])?;
            let rhs = c.prod(&[&g[j - 1], &g[i - 1]])?;
            c.eq(format!("g{i}g{j} = g{j}g{i}"), &lhs, &rhs);
        }
    }
    for (i, j) in c.adjacent() {
        let (gi, gj, ei, ej) = (&g[i - 1], &g[j - 1], &e[i - 1], &e[j - 1]);
        let lhs = c.prod(&[gi, gj, gi])?;
        let rhs = c.prod(&[gj, gi, gj])?;
        c.eq(format!("g{i}g{j}g{i} = g{j}g{i}g{j}"), &lhs, &rhs);
        let lhs = c.prod(&[gi, gj, ei])?;
        let rhs = c.prod(&[ej, gi, gj])?;
        c.eq(format!("g{i}g{j}e{i} = e{j}g{i}g{j}"), &lhs, &rhs);
        let a = c.prod(&[gi, ej, ei])?;
        let b = c.prod(&[ej, gi, ej])?;
        let d = c.prod(&[ei, ej, gi])?;
        c.eq(format!("g{i}e{j}e{i} = e{j}g{i}e{j}"), &a, &b);
        c.eq(format!("e{j}g{i}e{j} = e{i}e{j}g{i}"), &b, &d);
    }
    Ok(())
}

fn virtual_braid(c: &mut Ctx) -> Result<()> {
    let ph = &c.ph;
    let h: Vec<_> = c.idx().map(|i| ph.h(i)).collect::<Result<_>>()?;
    let f: Vec<_> = c.idx().map(|i| ph.f(i)).collect::<Result<_>>()?;
    let one = c.one();
    for pt in VirtualPoint::published() {
        let x = Scalar::int(pt.x);
        let y = pt.y.clone();
        let v: Vec<_> = c
            .idx()
            .map(|i| c.lin(&[(x.clone(), &h[i - 1]), (y.clone(), &f[i - 1])]))
            .collect();
        // q^-2 (p x^2 + 2 a q^2 x y + q^4 y^2 - x^2).
        let xy = &x * &y;
        let coeff = &s("q^-2")
            * &(&(&(&s("p") * &(&x * &x)) + &(&s("2*a*q^2") * &xy))
                + &(&(&s("q^4") * &(&y * &y)) - &(&x * &x)));
        for i in c.idx() {
            let (vi, fi) = (&v[i - 1], &f[i - 1]);
            let lhs = c.prod(&[vi, vi])?;
            let rhs = c.lin(&[(coeff.clone(), fi), (&x * &x, &one)]);
            c.eq(format!("[{pt}] V{i}^2 = q^-2(px^2 + 2aq^2xy + q^4y^2 - x^2)F{i} + x^2"), &lhs, &rhs);
            c.diag(format!("[{pt}] V{i}^2 = 1"), &lhs, &one);
        }
        for (i, j) in c.adjacent() {
            let (vi, vj, hi, hj) = (&v[i - 1], &v[j - 1], &h[i - 1], &h[j - 1]);
            let lhs = c.prod(&[vi, vj, vi])?;
            let rhs = c.prod(&[vj, vi, vj])?;
            c.eq(format!("[{pt}] V{i}V{j}V{i} = V{j}V{i}V{j}"), &lhs, &rhs);
            let lhs = c.prod(&[vi, vj, hi])?;
            let rhs = c.prod(&[hj, vi, vj])?;
            c.eq(format!("[{pt}] V{i}V{j}H{i} = H{j}V{i}V{j}"), &lhs, &rhs);
        }
        for (i, j) in c.far() {
            let lhs = c.prod(&[&h[i - 1], &v[j - 1]])?;
            let rhs = c.prod(&[&v[j - 1], &h[i - 1]])?;
            c.eq(format!("[{pt}] H{i}V{j} = V{j}H{i}"), &lhs, &rhs);
            if i < j {
                let lhs = c.prod(&[&v[i - 1], &v[j - 1]])?;
                let rhs = c.prod(&[&v[j - 1], &v[i - 1]])?;
                c.eq(format!("[{pt}] V{i}V{j} = V{j}V{i}"), &lhs, &rhs);
            }
        }
    }
    for pt in VirtualPoint::involutive() {
        let x = Scalar::int(pt.x);
        for i in c.idx() {
            let vi = c.lin(&[(x.clone(), &h[i - 1]), (pt.y.clone(), &f[i - 1])]);
            let lhs = c.prod(&[&vi, &vi])?;
            c.diag(format!("[{pt}] V{i}^2 = 1 (involutive choice)"), &lhs, &one);
        }
    }
    Ok(())
}
