//! Verification runs binding the cochain-level structure to concrete
//! algebras.
//!
//! Each check draws cocycles from canonical cocycle bases: a space with at
//! most [`FULL_BASIS_LIMIT`] basis cocycles is iterated in full, larger
//! spaces are sampled as seeded random combinations of the basis. Pairs are
//! iterated in full when both spaces are small and sampled otherwise;
//! triples are always sampled. Reports are deterministic in the algebra,
//! the parameters and the seed, and a failing item carries the
//! lexicographically first failing evaluation point.
//!
//! Identities that hold for arbitrary cochains are also evaluated on
//! `trials` seeded random cochains (items suffixed `_cochains`), so a run
//! is not vacuous when a cocycle space is zero.
//!
//! A [`Fault`] adds one to a single output scalar of the targeted operation
//! wherever it is evaluated on the left-hand side of an identity; a sound
//! check must then fail.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cochain::{
    cocycle_basis, degree_cap, diff_adjoint, diff_trivial, CoboundarySolver, Cochain, Coefficients,
    Membership,
};
use crate::error::{Error, Result};
use crate::gerstenhaber::{
    brace, brace_trivial, bracket, bracket_sign, circ, circ_trivial, cup_adjoint, cup_trivial,
    epsilon_push, HatMap,
};
use crate::hopf::HopfAlgebra;
use crate::linalg::{random_elem, Field};
use crate::report::{CheckItem, CheckParams, CheckReport, Counterexample, PassMode, QuotedCochain};

/// Cocycle spaces up to this many basis elements are iterated in full.
pub const FULL_BASIS_LIMIT: usize = 64;

/// Largest adjoint cochain space in which hatted cup products are tested
/// for coboundary membership.
pub const ADJOINT_SOLVER_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultTarget {
    Hat,
    Brace,
    Cup,
    Bracket,
}

/// A single perturbed scalar: `entry` (taken modulo the output length) of
/// the targeted operation's output is increased by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fault {
    pub target: FaultTarget,
    pub entry: usize,
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.target {
            FaultTarget::Hat => "hat",
            FaultTarget::Brace => "brace",
            FaultTarget::Cup => "cup",
            FaultTarget::Bracket => "bracket",
        };
        write!(f, "{t}:{}", self.entry)
    }
}

impl FromStr for Fault {
    type Err = Error;

    /// `target[:entry]`, e.g. `hat:3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Malformed {
            location: "fault".into(),
            reason,
        };
        let (t, e) = s.split_once(':').unwrap_or((s, "0"));
        let target = match t {
            "hat" => FaultTarget::Hat,
            "brace" => FaultTarget::Brace,
            "cup" => FaultTarget::Cup,
            "bracket" => FaultTarget::Bracket,
            other => return Err(bad(format!("unknown target {other:?}"))),
        };
        let entry = e
            .parse()
            .map_err(|_| bad(format!("entry {e:?} is not a nonnegative integer")))?;
        Ok(Fault { target, entry })
    }
}

/// Shared state of one check run: the algebra, cached cocycle bases and
/// hat maps, the seeded generator and the optional fault.
struct Run<'a, K: Field> {
    h: &'a HopfAlgebra<K>,
    fault: Option<Fault>,
    rng: ChaCha8Rng,
    trials: usize,
    bases: Vec<Option<Vec<Cochain<K>>>>,
    hats: Vec<Option<HatMap<K>>>,
}

/// A cocycle together with how it was obtained.
#[derive(Clone)]
struct Sample<K: Field> {
    label: String,
    cochain: Cochain<K>,
}

impl<K: Field> Sample<K> {
    fn quote(&self, field: &K) -> QuotedCochain {
        self.cochain.quote(field, &self.label)
    }
}

impl<'a, K: Field> Run<'a, K> {
    fn new(h: &'a HopfAlgebra<K>, trials: usize, seed: u64, fault: Option<Fault>) -> Self {
        Run {
            h,
            fault,
            rng: ChaCha8Rng::seed_from_u64(seed),
            trials,
            bases: Vec::new(),
            hats: Vec::new(),
        }
    }

    fn field(&self) -> &'a K {
        self.h.field()
    }

    fn require_degree(&self, degree: usize) -> Result<()> {
        match degree_cap(self.h.dim()) {
            Some(cap) if degree <= cap => Ok(()),
            cap => Err(Error::ResourceLimit {
                guard: "degree cap",
                what: format!(
                    "cocycle degree for {} (dim {})",
                    self.h.name(),
                    self.h.dim()
                ),
                size: degree as u128,
                limit: cap.unwrap_or(0),
            }),
        }
    }

    fn basis(&mut self, degree: usize) -> Result<&[Cochain<K>]> {
        self.require_degree(degree)?;
        if self.bases.len() <= degree {
            self.bases.resize(degree + 1, None);
        }
        if self.bases[degree].is_none() {
            self.bases[degree] = Some(cocycle_basis(self.h, degree, Coefficients::Trivial)?);
        }
        Ok(self.bases[degree].as_deref().unwrap())
    }

    fn random_cocycle(&mut self, degree: usize, k: usize) -> Result<Sample<K>> {
        self.basis(degree)?;
        let field = self.field();
        let basis = self.bases[degree].as_ref().unwrap();
        let mut c = Cochain::zeros(self.h, degree, Coefficients::Trivial)?;
        for b in basis {
            let r = random_elem(field, &mut self.rng);
            if field.is_zero(&r) {
                continue;
            }
            for (v, x) in c.values_mut().iter_mut().zip(b.values()) {
                if !field.is_zero(x) {
                    field.mul_add_assign(v, &r, x);
                }
            }
        }
        Ok(Sample {
            label: format!("Z^{degree} sample {k}"),
            cochain: c,
        })
    }

    fn random_cochain(&mut self, degree: usize, k: usize) -> Result<Sample<K>> {
        Ok(Sample {
            label: format!("C^{degree} sample {k}"),
            cochain: Cochain::random(self.h, degree, Coefficients::Trivial, &mut self.rng)?,
        })
    }

    fn cochain_pairs(&mut self, p: usize, q: usize) -> Result<Vec<(Sample<K>, Sample<K>)>> {
        (0..self.trials)
            .map(|k| Ok((self.random_cochain(p, k)?, self.random_cochain(q, k)?)))
            .collect()
    }

    fn basis_samples(&mut self, degree: usize) -> Result<Vec<Sample<K>>> {
        Ok(self
            .basis(degree)?
            .iter()
            .enumerate()
            .map(|(k, c)| Sample {
                label: format!("Z^{degree} basis {k}"),
                cochain: c.clone(),
            })
            .collect())
    }

    /// Full basis when small, `trials` random combinations otherwise.
    fn cocycles(&mut self, degree: usize) -> Result<Vec<Sample<K>>> {
        if self.basis(degree)?.len() <= FULL_BASIS_LIMIT {
            self.basis_samples(degree)
        } else {
            (0..self.trials)
                .map(|k| self.random_cocycle(degree, k))
                .collect()
        }
    }

    /// All basis pairs when both spaces are small, `trials` random pairs
    /// otherwise.
    fn pairs(&mut self, p: usize, q: usize) -> Result<Vec<(Sample<K>, Sample<K>)>> {
        let small = |n: usize| n <= FULL_BASIS_LIMIT;
        if small(self.basis(p)?.len()) && small(self.basis(q)?.len()) {
            let fs = self.basis_samples(p)?;
            let gs = self.basis_samples(q)?;
            Ok(fs
                .iter()
                .flat_map(|f| gs.iter().map(move |g| (f.clone(), g.clone())))
                .collect())
        } else {
            self.sampled_pairs(p, q)
        }
    }

    fn sampled_pairs(&mut self, p: usize, q: usize) -> Result<Vec<(Sample<K>, Sample<K>)>> {
        (0..self.trials)
            .map(|k| Ok((self.random_cocycle(p, k)?, self.random_cocycle(q, k)?)))
            .collect()
    }

    fn hat_map(&mut self, degree: usize) -> Result<&HatMap<K>> {
        if self.hats.len() <= degree {
            self.hats.resize(degree + 1, None);
        }
        if self.hats[degree].is_none() {
            self.hats[degree] = Some(HatMap::new(self.h, degree)?);
        }
        Ok(self.hats[degree].as_ref().unwrap())
    }

    fn hat(&mut self, f: &Cochain<K>) -> Result<Cochain<K>> {
        let h = self.h;
        self.hat_map(f.degree())?.apply(h, f)
    }

    /// Applies the fault if it targets `target`.
    fn perturb(&self, target: FaultTarget, mut c: Cochain<K>) -> Cochain<K> {
        if let Some(fault) = self.fault.filter(|f| f.target == target) {
            let field = self.field();
            let vals = c.values_mut();
            if !vals.is_empty() {
                let i = fault.entry % vals.len();
                vals[i] = field.add(&vals[i], &field.one());
            }
        }
        c
    }

    fn hat_lhs(&mut self, f: &Cochain<K>) -> Result<Cochain<K>> {
        let c = self.hat(f)?;
        Ok(self.perturb(FaultTarget::Hat, c))
    }
}

/// Compares two cochains of the same shape, recording the first differing
/// position as a counterexample.
fn compare<K: Field>(
    field: &K,
    item: &mut CheckItem,
    inputs: &[&Sample<K>],
    lhs: &Cochain<K>,
    rhs: &Cochain<K>,
) {
    item.cases += 1;
    if item.counterexample.is_some() {
        return;
    }
    let (l, r) = (lhs.values(), rhs.values());
    if let Some(pos) = (0..l.len()).find(|&i| l[i] != r[i]) {
        item.fail(Counterexample {
            inputs: inputs.iter().map(|s| s.quote(field)).collect(),
            tuple: lhs.unflatten(pos),
            lhs: field.format_elem(&l[pos]),
            rhs: field.format_elem(&r[pos]),
        });
    }
}

fn expect_zero<K: Field>(field: &K, item: &mut CheckItem, inputs: &[&Sample<K>], c: &Cochain<K>) {
    let zero = c.scale(field, &field.zero());
    compare(field, item, inputs, c, &zero);
}

fn new_report<K: Field>(check: &str, h: &HopfAlgebra<K>, params: CheckParams) -> CheckReport {
    CheckReport::new(check, h.name(), h.field().spec().to_string(), params)
}

/// Hat lifting of cocycles: `d(hat f) = 0`, `eps_* hat f = f`, and
/// `hat(f u g) = hat f u hat g`, for cocycles of degree up to `max_degree`
/// (pairs of total degree up to `max_degree`).
pub fn check_thm2<K: Field>(
    h: &HopfAlgebra<K>,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    check_thm2_with(h, max_degree, trials, seed, None)
}

pub fn check_thm2_with<K: Field>(
    h: &HopfAlgebra<K>,
    max_degree: usize,
    trials: usize,
    seed: u64,
    fault: Option<Fault>,
) -> Result<CheckReport> {
    let field = h.field();
    let mut run = Run::new(h, trials, seed, fault);
    let mut preservation = CheckItem::new("cocycle_preservation", PassMode::ExactIdentity);
    let mut section = CheckItem::new("section", PassMode::ExactIdentity);
    let mut mult = CheckItem::new("multiplicativity", PassMode::ExactIdentity);
    let mut section_c = CheckItem::new("section_cochains", PassMode::ExactIdentity);
    let mut mult_c = CheckItem::new("multiplicativity_cochains", PassMode::ExactIdentity);
    for n in 0..=max_degree {
        // linear conditions: the full basis decides them
        for f in run.basis_samples(n)? {
            let fh = run.hat_lhs(&f.cochain)?;
            expect_zero(field, &mut preservation, &[&f], &diff_adjoint(h, &fh)?);
            compare(
                field,
                &mut section,
                &[&f],
                &epsilon_push(h, &fh)?,
                &f.cochain,
            );
        }
    }
    for total in 0..=max_degree {
        for p in 0..=total {
            let q = total - p;
            for (f, g) in run.pairs(p, q)? {
                let lhs = run.hat_lhs(&cup_trivial(h, &f.cochain, &g.cochain)?)?;
                let rhs = cup_adjoint(h, &run.hat(&f.cochain)?, &run.hat(&g.cochain)?)?;
                compare(field, &mut mult, &[&f, &g], &lhs, &rhs);
            }
        }
    }
    for n in 0..=max_degree {
        for k in 0..trials {
            let f = run.random_cochain(n, k)?;
            let fh = run.hat_lhs(&f.cochain)?;
            compare(
                field,
                &mut section_c,
                &[&f],
                &epsilon_push(h, &fh)?,
                &f.cochain,
            );
        }
    }
    for total in 0..=max_degree {
        for p in 0..=total {
            for (f, g) in run.cochain_pairs(p, total - p)? {
                let lhs = run.hat_lhs(&cup_trivial(h, &f.cochain, &g.cochain)?)?;
                let rhs = cup_adjoint(h, &run.hat(&f.cochain)?, &run.hat(&g.cochain)?)?;
                compare(field, &mut mult_c, &[&f, &g], &lhs, &rhs);
            }
        }
    }
    let mut report = new_report(
        "thm2",
        h,
        CheckParams {
            max_degree: Some(max_degree),
            trials: Some(trials),
            seed: Some(seed),
            fault: fault.map(|f| f.to_string()),
            ..CheckParams::default()
        },
    );
    for item in [preservation, section, mult, section_c, mult_c] {
        report.push(item);
    }
    Ok(report)
}

/// Stability of the hat image under braces:
/// `hat f o_i hat g = hat(f o_i hat g)` for cocycles `f` of degree `p >= 1`,
/// `g` of degree `q`, and every `1 <= i <= p`.
pub fn check_thm3<K: Field>(
    h: &HopfAlgebra<K>,
    p: usize,
    q: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    check_thm3_with(h, p, q, trials, seed, None)
}

pub fn check_thm3_with<K: Field>(
    h: &HopfAlgebra<K>,
    p: usize,
    q: usize,
    trials: usize,
    seed: u64,
    fault: Option<Fault>,
) -> Result<CheckReport> {
    if p == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: 0 });
    }
    let field = h.field();
    let mut run = Run::new(h, trials, seed, fault);
    let mut items: Vec<CheckItem> = (1..=p)
        .map(|i| CheckItem::new(format!("insertion_{i}"), PassMode::ExactIdentity))
        .collect();
    let mut items_c: Vec<CheckItem> = (1..=p)
        .map(|i| CheckItem::new(format!("insertion_{i}_cochains"), PassMode::ExactIdentity))
        .collect();
    let cocycle_pairs = run.pairs(p, q)?;
    let cochain_pairs = run.cochain_pairs(p, q)?;
    for (pairs, items) in [(cocycle_pairs, &mut items), (cochain_pairs, &mut items_c)] {
        for (f, g) in pairs {
            let fh = run.hat(&f.cochain)?;
            let gh = run.hat(&g.cochain)?;
            for (i, item) in (1..=p).zip(items.iter_mut()) {
                let lhs = run.perturb(FaultTarget::Brace, brace(h, &fh, &gh, i)?);
                let rhs = run.hat(&brace_trivial(h, &f.cochain, &gh, i)?)?;
                compare(field, item, &[&f, &g], &lhs, &rhs);
            }
        }
    }
    let mut report = new_report(
        "thm3",
        h,
        CheckParams {
            p: Some(p),
            q: Some(q),
            trials: Some(trials),
            seed: Some(seed),
            fault: fault.map(|f| f.to_string()),
            ..CheckParams::default()
        },
    );
    items
        .into_iter()
        .chain(items_c)
        .for_each(|i| report.push(i));
    Ok(report)
}

/// Graded commutativity of the cup product in cohomology:
/// `f u g - (-1)^{pq} g u f` is a coboundary for `trials` sampled cocycle
/// pairs; likewise for hatted classes under the cup product with
/// coefficients in `A` when that complex is small enough.
pub fn check_commutativity<K: Field>(
    h: &HopfAlgebra<K>,
    p: usize,
    q: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    check_commutativity_with(h, p, q, trials, seed, None)
}

/// Records whether `c` is a coboundary, verifying any witness found.
fn coboundary_case<K: Field>(
    h: &HopfAlgebra<K>,
    solver: &mut CoboundarySolver<K>,
    item: &mut CheckItem,
    inputs: &[&Sample<K>],
    c: &Cochain<K>,
) -> Result<()> {
    let field = h.field();
    match solver.query(h, c)? {
        Membership::Coboundary(x) => {
            let dx = match x.coefficients() {
                Coefficients::Trivial => diff_trivial(h, &x)?,
                Coefficients::Adjoint => diff_adjoint(h, &x)?,
            };
            compare(field, item, inputs, &dx, c);
            if item.witness.is_none() && item.passed() {
                item.witness = Some(x.quote(field, "witness"));
            }
        }
        Membership::Residue(pos, v) => {
            item.cases += 1;
            if item.counterexample.is_none() {
                item.fail(Counterexample {
                    inputs: inputs.iter().map(|s| s.quote(field)).collect(),
                    tuple: c.unflatten(pos),
                    lhs: field.format_elem(&v),
                    rhs: field.format_elem(&field.zero()),
                });
            }
        }
    }
    Ok(())
}

pub fn check_commutativity_with<K: Field>(
    h: &HopfAlgebra<K>,
    p: usize,
    q: usize,
    trials: usize,
    seed: u64,
    fault: Option<Fault>,
) -> Result<CheckReport> {
    let field = h.field();
    let mut run = Run::new(h, trials, seed, fault);
    run.require_degree(p + q)?;
    let sign = field.sign(p * q);
    let pairs = run.sampled_pairs(p, q)?;
    let mut trivial = CheckItem::new("graded_commutativity", PassMode::CoboundaryWitness);
    let adjoint_len = crate::cochain::cochain_len(h.dim(), p + q, Coefficients::Adjoint)?;
    let with_adjoint = adjoint_len <= ADJOINT_SOLVER_LIMIT;
    let mut adjoint = CheckItem::new("hatted_graded_commutativity", PassMode::CoboundaryWitness);
    if p + q == 0 {
        for (f, g) in &pairs {
            let lhs = run.perturb(FaultTarget::Cup, cup_trivial(h, &f.cochain, &g.cochain)?);
            let rhs = cup_trivial(h, &g.cochain, &f.cochain)?;
            compare(field, &mut trivial, &[f, g], &lhs, &rhs);
        }
        trivial.mode = trivial.mode.map(|_| PassMode::ExactIdentity);
    } else {
        let mut solver = CoboundarySolver::new(h, p + q, Coefficients::Trivial)?;
        for (f, g) in &pairs {
            let fg = run.perturb(FaultTarget::Cup, cup_trivial(h, &f.cochain, &g.cochain)?);
            let gf = cup_trivial(h, &g.cochain, &f.cochain)?;
            let c = fg.sub(field, &gf.scale(field, &sign))?;
            coboundary_case(h, &mut solver, &mut trivial, &[f, g], &c)?;
        }
        if with_adjoint {
            let mut solver = CoboundarySolver::new(h, p + q, Coefficients::Adjoint)?;
            for (f, g) in &pairs {
                let fh = run.hat(&f.cochain)?;
                let gh = run.hat(&g.cochain)?;
                let fg = run.perturb(FaultTarget::Cup, cup_adjoint(h, &fh, &gh)?);
                let gf = cup_adjoint(h, &gh, &fh)?;
                let c = fg.sub(field, &gf.scale(field, &sign))?;
                coboundary_case(h, &mut solver, &mut adjoint, &[f, g], &c)?;
            }
        }
    }
    let mut report = new_report(
        "comm",
        h,
        CheckParams {
            p: Some(p),
            q: Some(q),
            trials: Some(trials),
            seed: Some(seed),
            fault: fault.map(|f| f.to_string()),
            ..CheckParams::default()
        },
    );
    report.push(trivial);
    if with_adjoint && p + q > 0 {
        report.push(adjoint);
    }
    Ok(report)
}

/// Triple degree configurations exercised by the Jacobi and pre-Lie items.
pub const TRIPLE_CONFIGS: [(usize, usize, usize); 2] = [(1, 1, 1), (1, 1, 2)];

/// Bracket structure on the hat image: closure
/// `[hat f, hat g] = hat(f o hat g - (-1)^{(p-1)(q-1)} g o hat f)`, the
/// bracket of hatted cocycles is a cocycle, antisymmetry and `[F,F] = 0`
/// for odd `F` (pairs of total degree up to `max_degree`, including `(F, F)`), and graded
/// Jacobi and pre-Lie symmetry on `trials` sampled triples for each
/// configuration in [`TRIPLE_CONFIGS`] of total degree up to
/// `max_degree + 1`.
pub fn check_bracket_structure<K: Field>(
    h: &HopfAlgebra<K>,
    max_degree: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    check_bracket_structure_with(h, max_degree, trials, seed, None)
}

pub fn check_bracket_structure_with<K: Field>(
    h: &HopfAlgebra<K>,
    max_degree: usize,
    trials: usize,
    seed: u64,
    fault: Option<Fault>,
) -> Result<CheckReport> {
    let field = h.field();
    let mut run = Run::new(h, trials, seed, fault);
    let item = |name: &str| CheckItem::new(name, PassMode::ExactIdentity);
    let mut closure = item("closure");
    let mut cocycle = item("bracket_cocycle");
    let mut antisym = item("antisymmetry");
    let mut odd = item("odd_self_bracket");
    let mut jacobi = item("jacobi");
    let mut pre_lie = item("pre_lie");
    let mut closure_c = item("closure_cochains");
    let mut antisym_c = item("antisymmetry_cochains");
    let mut jacobi_c = item("jacobi_cochains");
    let mut pre_lie_c = item("pre_lie_cochains");

    for total in 2..=max_degree {
        for p in 1..total {
            let q = total - p;
            let cocycle_pairs = run.pairs(p, q)?;
            let cochain_pairs = run.cochain_pairs(p, q)?;
            let groups = [
                (cocycle_pairs, &mut closure, &mut antisym, true),
                (cochain_pairs, &mut closure_c, &mut antisym_c, false),
            ];
            for (pairs, closure, antisym, cocycles) in groups {
                for (f, g) in pairs {
                    let fh = run.hat(&f.cochain)?;
                    let gh = run.hat(&g.cochain)?;
                    let fg = run.perturb(FaultTarget::Bracket, bracket(h, &fh, &gh)?);
                    let s = field.sign(bracket_sign(p, q));
                    let inner = circ_trivial(h, &f.cochain, &gh)?
                        .sub(field, &circ_trivial(h, &g.cochain, &fh)?.scale(field, &s))?;
                    let rhs = run.hat(&inner)?;
                    compare(field, closure, &[&f, &g], &fg, &rhs);
                    if cocycles {
                        expect_zero(field, &mut cocycle, &[&f, &g], &diff_adjoint(h, &fg)?);
                    }
                    let gf = bracket(h, &gh, &fh)?.scale(field, &field.neg(&s));
                    compare(field, antisym, &[&f, &g], &fg, &gf);
                }
            }
        }
    }
    for p in (1..=max_degree / 2).step_by(2) {
        for f in run.cocycles(p)? {
            let fh = run.hat(&f.cochain)?;
            let ff = run.perturb(FaultTarget::Bracket, bracket(h, &fh, &fh)?);
            expect_zero(field, &mut odd, &[&f], &ff);
        }
    }
    for &(a, b, c) in TRIPLE_CONFIGS
        .iter()
        .filter(|t| t.0 + t.1 + t.2 <= max_degree + 1)
    {
        for k in 0..trials {
            let cocycle_triple = [
                run.random_cocycle(a, k)?,
                run.random_cocycle(b, k)?,
                run.random_cocycle(c, k)?,
            ];
            let cochain_triple = [
                run.random_cochain(a, k)?,
                run.random_cochain(b, k)?,
                run.random_cochain(c, k)?,
            ];
            let groups = [
                (cocycle_triple, &mut jacobi, &mut pre_lie),
                (cochain_triple, &mut jacobi_c, &mut pre_lie_c),
            ];
            for (triple, jacobi, pre_lie) in groups {
                let inputs = [&triple[0], &triple[1], &triple[2]];
                let x = run.hat(&triple[0].cochain)?;
                let y = run.hat(&triple[1].cochain)?;
                let z = run.hat(&triple[2].cochain)?;
                let br = |u: &Cochain<K>, v: &Cochain<K>| -> Result<Cochain<K>> {
                    Ok(run.perturb(FaultTarget::Bracket, bracket(h, u, v)?))
                };
                // (-1)^{(a-1)(c-1)} [x,[y,z]] + cyclic
                let t1 = br(&x, &br(&y, &z)?)?.scale(field, &field.sign(bracket_sign(a, c)));
                let t2 = br(&y, &br(&z, &x)?)?.scale(field, &field.sign(bracket_sign(b, a)));
                let t3 = br(&z, &br(&x, &y)?)?.scale(field, &field.sign(bracket_sign(c, b)));
                expect_zero(
                    field,
                    jacobi,
                    &inputs,
                    &t1.add(field, &t2)?.add(field, &t3)?,
                );
                // (x o y) o z - x o (y o z) is graded symmetric in y, z
                let assoc = |v: &Cochain<K>, w: &Cochain<K>| -> Result<Cochain<K>> {
                    circ(h, &circ(h, &x, v)?, w)?.sub(field, &circ(h, &x, &circ(h, v, w)?)?)
                };
                let lhs = assoc(&y, &z)?;
                let rhs = assoc(&z, &y)?.scale(field, &field.sign(bracket_sign(b, c)));
                compare(field, pre_lie, &inputs, &lhs, &rhs);
            }
        }
    }
    let mut report = new_report(
        "bracket",
        h,
        CheckParams {
            max_degree: Some(max_degree),
            trials: Some(trials),
            seed: Some(seed),
            fault: fault.map(|f| f.to_string()),
            ..CheckParams::default()
        },
    );
    for item in [
        closure, cocycle, antisym, odd, jacobi, pre_lie, closure_c, antisym_c, jacobi_c, pre_lie_c,
    ] {
        report.push(item);
    }
    Ok(report)
}
