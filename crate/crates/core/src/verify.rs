//! Self-checks: the worked examples, randomized batteries for the solution
//! calculus, exhaustive oracle sweeps for `G_Phi`, the determinant identities
//! and Smith normal form.
//!
//! Each battery returns a [`CheckOutcome`]. Comparisons are made against
//! exhaustive scans of the ring, never against the routine under test.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::euclid::{divides, EuclideanDomain, Integer, Poly};
use crate::linsolve::{compose_generating, generating_solution, is_generating, solution_coset};
use crate::matrix::{smith_normal_form, DivisorChainPhi, DomainMatrix, MatrixRm};
use crate::residue::{Modulus, Residue};
use crate::symdet;
use crate::zelisko::{check_structure, is_member, oracle_is_member, sample_members, FiniteRing, MembershipOracle};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({:.3?}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.elapsed,
            self.detail
        )
    }
}

fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckOutcome {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckOutcome { name: name.to_string(), passed, detail, elapsed: start.elapsed() }
}

fn zm(m: i64) -> Modulus<Integer> {
    Modulus::new(Integer::from(m)).expect("valid modulus")
}

fn reps(v: &[Residue<Integer>]) -> Vec<i64> {
    v.iter().map(|r| r.rep().to_i64().expect("small")).collect()
}

fn scan_solutions(m: &Modulus<Integer>, a: i64, b: i64) -> Vec<i64> {
    let size = m.value().to_i64().expect("small");
    (0..size).filter(|x| (a * x - b).rem_euclid(size) == 0).collect()
}

/// Worked example over `Z_36`.
pub fn z36_vectors() -> CheckOutcome {
    timed("worked example over Z_36", || {
        let m = zm(36);
        let (a, b) = (m.from_i64(33), m.from_i64(30));
        let g = generating_solution(&a, &b)?;
        let coset = reps(&solution_coset(&a, &b)?.enumerate(1000)?);
        let ann = reps(&a.annihilator(1000)?);
        let inv = m.from_i64(11).inverse()?;
        let dec = b.unit_decompose();
        let checks = [
            g.associates(&m.from_i64(2))?,
            coset == [2, 14, 26],
            coset == scan_solutions(&m, 33, 30),
            ann == [0, 12, 24],
            ann == scan_solutions(&m, 33, 0),
            inv == m.from_i64(23),
            dec.mu == Integer::from(6) && dec.unit == m.from_i64(5),
        ];
        let ok = checks.iter().all(|&c| c);
        Ok((ok, format!("x0 = {g}, coset = {coset:?}, Ann(33) = {ann:?}, 11^-1 = {inv}")))
    })
}

/// Worked example over `Z_144`, with the solution set from an exhaustive scan.
pub fn z144_vectors() -> CheckOutcome {
    timed("worked example over Z_144", || {
        let m = zm(144);
        let (four, eight) = (m.from_i64(4), m.from_i64(8));
        let gen = eight.ann_generator();
        let ann8 = reps(&eight.annihilator(1000)?);
        let ann4 = reps(&four.annihilator(1000)?);
        let coset = solution_coset(&four, &eight)?.enumerate(1000)?;
        let set = reps(&coset);
        let all_generating = coset.iter().all(|x| is_generating(&four, &eight, x));
        let checks = [
            gen == m.from_i64(18),
            ann8 == [0, 18, 36, 54, 72, 90, 108, 126],
            ann8 == scan_solutions(&m, 8, 0),
            ann4 == [0, 36, 72, 108],
            set == [2, 38, 74, 110],
            set == scan_solutions(&m, 4, 8),
            all_generating,
        ];
        let ok = checks.iter().all(|&c| c);
        Ok((ok, format!("Ann(8) = 18 Z_144 = {ann8:?}, 4x = 8: {set:?}, all generating: {all_generating}")))
    })
}

/// Exhaustive divisibility and solution tables of a finite ring.
struct RingOracle<D: EuclideanDomain> {
    ring: FiniteRing<D>,
    // divides[a * size + b]: a | b
    divides: Vec<bool>,
    nonzero: Vec<u16>,
}

impl<D: EuclideanDomain> RingOracle<D> {
    fn new(m: &Modulus<D>) -> Result<Self> {
        let ring = FiniteRing::new(m)?;
        let size = ring.size() as u16;
        let mut divides = vec![false; size as usize * size as usize];
        for a in 0..size {
            for y in 0..size {
                divides[a as usize * size as usize + ring.mul(a, y) as usize] = true;
            }
        }
        let nonzero = (1..size).collect();
        Ok(RingOracle { ring, divides, nonzero })
    }

    fn idx(&self, r: &Residue<D>) -> u16 {
        self.ring.index_of(r)
    }

    fn divides(&self, a: u16, b: u16) -> bool {
        self.divides[a as usize * self.ring.size() + b as usize]
    }

    /// `x` solves `a x = b` and divides every solution.
    fn is_generating(&self, a: u16, b: u16, x: u16) -> bool {
        self.ring.mul(a, x) == b
            && (0..self.ring.size() as u16)
                .filter(|&s| self.ring.mul(a, s) == b)
                .all(|s| self.divides(x, s))
    }

    fn generating_solutions(&self, a: u16, b: u16) -> Vec<u16> {
        (0..self.ring.size() as u16).filter(|&x| self.is_generating(a, b, x)).collect()
    }

    /// `{ x : c x = 0 }` equals the ideal generated by `g`.
    fn generates_annihilator(&self, c: u16, g: u16) -> bool {
        (0..self.ring.size() as u16).all(|x| (self.ring.mul(c, x) == 0) == self.divides(g, x))
    }

    fn pick(&self, rng: &mut ChaCha8Rng, from: &[u16]) -> u16 {
        from[rng.gen_range(0..from.len())]
    }

    /// Random nonzero `c1 | c2 | ... ` of the given length.
    fn random_chain(&self, rng: &mut ChaCha8Rng, len: usize) -> Vec<u16> {
        'retry: loop {
            let mut chain = vec![self.pick(rng, &self.nonzero)];
            while chain.len() < len {
                let r = rng.gen_range(0..self.ring.size() as u16);
                let next = self.ring.mul(*chain.last().unwrap(), r);
                if next == 0 {
                    continue 'retry;
                }
                chain.push(next);
            }
            return chain;
        }
    }
}

fn chain_ring<D: EuclideanDomain>(m: &Modulus<D>, count: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let o = RingOracle::new(m)?;
    let mut failures = 0;
    for _ in 0..count {
        let c: Vec<_> = o.random_chain(rng, 3).into_iter().map(|i| o.ring.element(i).clone()).collect();
        let ci: Vec<u16> = c.iter().map(|x| o.idx(x)).collect();
        // the pinned generating solutions, or any others found by the scan
        let (g21, g32) = if rng.gen_bool(0.5) {
            (generating_solution(&c[0], &c[1])?, generating_solution(&c[1], &c[2])?)
        } else {
            let g21 = o.pick(rng, &o.generating_solutions(ci[0], ci[1]));
            let g32 = o.pick(rng, &o.generating_solutions(ci[1], ci[2]));
            (o.ring.element(g21).clone(), o.ring.element(g32).clone())
        };
        if !o.is_generating(ci[0], ci[1], o.idx(&g21)) || !o.is_generating(ci[1], ci[2], o.idx(&g32)) {
            failures += 1;
            continue;
        }
        let g = compose_generating(&g21, &g32)?;
        if !o.is_generating(ci[0], ci[2], o.idx(&g)) {
            failures += 1;
        }
    }
    Ok(failures)
}

fn poly_ring(p: u32, m: &[i64]) -> Modulus<Poly> {
    Modulus::new(Poly::new(p, m)).expect("valid modulus")
}

/// Products of generating solutions along random chains `c1 | c2 | c3` are
/// generating, judged against exhaustive solution sets.
pub fn chain_battery(chains_per_ring: usize, seed: u64) -> CheckOutcome {
    timed("generating solutions compose along chains", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        let mut rings = Vec::new();
        for m in [12, 36, 144] {
            failures += chain_ring(&zm(m), chains_per_ring, &mut rng)?;
            rings.push(format!("Z_{m}"));
        }
        failures += chain_ring(&poly_ring(2, &[0, 1, 0, 0, 1]), chains_per_ring, &mut rng)?;
        rings.push("F_2[x]/(x^4+x)".into());
        let total = chains_per_ring * rings.len();
        Ok((failures == 0, format!("{} of {total} chains over {} ok", total - failures, rings.join(", "))))
    })
}

fn transfer_ring<D: EuclideanDomain>(m: &Modulus<D>, count: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let o = RingOracle::new(m)?;
    let mut failures = 0;
    for _ in 0..count {
        let c: Vec<_> = o.random_chain(rng, 2).into_iter().map(|i| o.ring.element(i).clone()).collect();
        let g = generating_solution(&c[0], &c[1])?;
        let (a1, a2) = (c[0].alpha_element(), c[1].alpha_element());
        let ok = &g * &a2 == a1
            && o.generates_annihilator(o.idx(&c[0]), o.idx(&a1))
            && o.generates_annihilator(o.idx(&c[1]), o.idx(&a2))
            && o.is_generating(o.idx(&a2), o.idx(&a1), o.idx(&g));
        if !ok {
            failures += 1;
        }
    }
    Ok(failures)
}

/// `[c2/c1] * alpha_2 = alpha_1` for the unit-twisted annihilator
/// generators, and its failure for the plain generators `18`, `36` of the
/// `Z_144` example.
pub fn transfer_battery(pairs_per_ring: usize, seed: u64) -> CheckOutcome {
    timed("annihilator transfer identity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        let mut rings = 0;
        for m in [12, 36, 50, 144] {
            failures += transfer_ring(&zm(m), pairs_per_ring, &mut rng)?;
            rings += 1;
        }
        failures += transfer_ring(&poly_ring(2, &[0, 1, 0, 0, 1]), pairs_per_ring, &mut rng)?;
        failures += transfer_ring(&poly_ring(3, &[0, 0, 1, 1]), pairs_per_ring, &mut rng)?;
        rings += 2;
        let total = pairs_per_ring * rings;

        // negative control: g = 38 with the plain generators 18 and 36
        let m = zm(144);
        let (g, a1, a2) = (m.from_i64(38), m.from_i64(36), m.from_i64(18));
        let control_fails = &g * &a2 != a1 && !scan_solutions(&m, 18, 36).contains(&38);
        let twisted_ok = scan_solutions(&m, 126, 36).contains(&38);
        let ok = failures == 0 && control_fails && twisted_ok;
        Ok((
            ok,
            format!(
                "{} of {total} pairs ok; 38*18 = {} != 36: {control_fails}; 38 solves 126x = 36: {twisted_ok}",
                total - failures,
                &g * &a2
            ),
        ))
    })
}

/// The `Phi` grid of the exhaustive sweep.
pub fn sweep_grid(level: Level) -> Vec<(i64, Vec<i64>)> {
    let mut grid = Vec::new();
    for m in [4, 8] {
        for d in [[2, 2], [2, 4], [1, 2], [2, 0], [1, 0]] {
            grid.push((m, d.to_vec()));
        }
    }
    grid.push((4, vec![1, 2, 0]));
    if level == Level::Full {
        grid.push((8, vec![1, 2, 4]));
    }
    grid
}

/// Result of sweeping every `n x n` matrix over `R_m` for one `Phi`.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub label: String,
    pub n: usize,
    pub ring_size: usize,
    pub matrices: u64,
    /// Members found by the oracle, encoded by [`encode`], ascending.
    pub members: Vec<u64>,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
    pub witness_checked: u64,
    pub witness_failures: u64,
}

/// Base-`|R_m|` code of an index matrix, first entry most significant.
pub fn encode(a: &[u16], size: usize) -> u64 {
    a.iter().fold(0u64, |acc, &x| acc * size as u64 + x as u64)
}

fn witness_ok<D: EuclideanDomain>(h: &MatrixRm<D>, s: &MatrixRm<D>, phi_m: &MatrixRm<D>) -> Result<bool> {
    Ok(h.mat_mul(phi_m)? == phi_m.mat_mul(s)? && s.det() == h.det())
}

/// Runs the oracle, [`is_member`] and [`check_structure`] on every matrix and
/// replays the witness of every accepted one.
pub fn sweep<D: EuclideanDomain>(label: &str, phi: &DivisorChainPhi<D>) -> Result<SweepReport> {
    let oracle = MembershipOracle::new(phi)?;
    let ring = oracle.ring();
    let n = phi.n();
    let phi_m = phi.to_matrix();
    let mut h = MatrixRm::identity(n, phi.modulus());
    let mut prev: Vec<Option<u16>> = vec![None; n * n];
    let mut report = SweepReport {
        label: label.to_string(),
        n,
        ring_size: ring.size(),
        matrices: 0,
        members: Vec::new(),
        mismatches: 0,
        first_mismatch: None,
        witness_checked: 0,
        witness_failures: 0,
    };
    let mut failure: Option<Error> = None;
    oracle.for_each_matrix(|a| {
        if failure.is_some() {
            return;
        }
        let mut step = || -> Result<()> {
            for (k, &x) in a.iter().enumerate() {
                if prev[k] != Some(x) {
                    h.set(k / n, k % n, ring.element(x).clone())?;
                    prev[k] = Some(x);
                }
            }
            report.matrices += 1;
            let by_oracle = oracle.is_member_indices(a)?;
            let by_entries = is_member(&h, phi)?;
            let structured = match check_structure(&h, phi) {
                Ok(sm) => Some(sm),
                Err(Error::NotInvertible(_)) | Err(Error::StructureViolation { .. }) => None,
                Err(e) => return Err(e),
            };
            if by_oracle != by_entries || by_oracle != structured.is_some() {
                report.mismatches += 1;
                report.first_mismatch.get_or_insert_with(|| {
                    format!("{h}: oracle {by_oracle}, entrywise {by_entries}, structure {}", structured.is_some())
                });
            }
            if by_oracle {
                report.members.push(encode(a, ring.size()));
            }
            if let Some(sm) = structured {
                report.witness_checked += 1;
                if !witness_ok(&h, &sm.witness, &phi_m)? {
                    report.witness_failures += 1;
                }
            }
            Ok(())
        };
        if let Err(e) = step() {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Sweeps the grid over integer rings.
pub fn sweep_all(level: Level) -> Result<Vec<(DivisorChainPhi<Integer>, SweepReport)>> {
    sweep_grid(level)
        .into_iter()
        .map(|(m, diag)| {
            let modulus = zm(m);
            let d: Vec<_> = diag.iter().map(|&x| modulus.from_i64(x)).collect();
            let phi = DivisorChainPhi::build(d.len(), &d)?;
            let label = format!("Z_{m} diag{diag:?}");
            let report = sweep(&label, &phi)?;
            Ok((phi, report))
        })
        .collect()
}

/// Criterion outcome for the sweep.
pub fn equivalence_outcome(reports: &[SweepReport], elapsed: Duration) -> CheckOutcome {
    let matrices: u64 = reports.iter().map(|r| r.matrices).sum();
    let members: usize = reports.iter().map(|r| r.members.len()).sum();
    let mismatches: u64 = reports.iter().map(|r| r.mismatches).sum();
    let mut detail = format!(
        "{} Phi, {matrices} matrices, {members} members, {mismatches} disagreements",
        reports.len()
    );
    if let Some(m) = reports.iter().find_map(|r| r.first_mismatch.clone()) {
        detail.push_str(&format!("; first: {m}"));
    }
    CheckOutcome {
        name: "oracle = entrywise = structural membership".into(),
        passed: mismatches == 0 && members > 0,
        detail,
        elapsed,
    }
}

/// Witness validity over the sweep plus sampled members of larger `Phi`.
pub fn witness_outcome(reports: &[SweepReport], samples: usize, seed: u64) -> CheckOutcome {
    let swept: u64 = reports.iter().map(|r| r.witness_checked).sum();
    let swept_fail: u64 = reports.iter().map(|r| r.witness_failures).sum();
    timed("witness S: H Phi = Phi S, det S = det H", || {
        let (checked, failed, oracle_checked) = sampled_witnesses(samples, seed)?;
        let ok = swept_fail == 0 && failed == 0 && swept > 0;
        Ok((
            ok,
            format!(
                "swept members {} of {swept} ok; sampled {} of {checked} ok ({oracle_checked} also confirmed by the oracle)",
                swept - swept_fail,
                checked - failed
            ),
        ))
    })
}

fn check_samples<D: EuclideanDomain>(
    phi: &DivisorChainPhi<D>,
    count: usize,
    seed: u64,
    tally: &mut (usize, usize, usize),
) -> Result<()> {
    let phi_m = phi.to_matrix();
    for sm in sample_members(phi, seed, count, 10_000)? {
        tally.0 += 1;
        let mut ok = witness_ok(&sm.h, &sm.witness, &phi_m)? && is_member(&sm.h, phi)?;
        match oracle_is_member(&sm.h, phi) {
            Ok(v) => {
                ok &= v;
                tally.2 += 1;
            }
            Err(Error::RingTooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
        if !ok {
            tally.1 += 1;
        }
    }
    Ok(())
}

/// `Phi` used for sampling beyond the sweep, as `(modulus, diagonal)`.
fn sampling_grid() -> Vec<(Integer, Vec<Integer>)> {
    let i = |x: i64| Integer::from(x);
    let big = Integer::from(3i64.pow(5)) * Integer::from(1i64 << 62);
    let big_d1 = Integer::from(6);
    let big_d2 = Integer::from(36) * Integer::from(1i64 << 40);
    vec![
        (i(144), vec![i(1), i(2), i(12), i(24), i(0)]),
        (i(50), vec![i(5), i(30), i(0), i(0)]),
        (i(36), vec![i(3), i(6), i(12)]),
        (i(12), vec![i(1), i(2), i(6)]),
        (big, vec![big_d1, big_d2, i(0)]),
    ]
}

fn sampled_witnesses(samples: usize, seed: u64) -> Result<(usize, usize, usize)> {
    let grid = sampling_grid();
    let per = samples.div_ceil(grid.len() + 1);
    let mut tally = (0, 0, 0);
    for (k, (m, diag)) in grid.into_iter().enumerate() {
        let modulus = Modulus::new(m)?;
        let d: Vec<_> = diag.iter().map(|x| modulus.reduce(x)).collect();
        let phi = DivisorChainPhi::build(d.len(), &d)?;
        check_samples(&phi, per, seed + k as u64, &mut tally)?;
    }
    let pm = poly_ring(2, &[0, 1, 0, 0, 1]);
    let x = pm.reduce(&Poly::new(2, &[0, 1]));
    let x2x = pm.reduce(&Poly::new(2, &[0, 1, 1]));
    let phi = DivisorChainPhi::build(4, &[pm.one(), x, x2x, pm.zero()])?;
    check_samples(&phi, per, seed + 100, &mut tally)?;
    Ok(tally)
}

/// Products and inverses of swept members are members. All pairs are
/// multiplied for small member sets; otherwise every inverse and
/// `sampled_pairs` deterministic random products are checked.
pub fn closure_outcome(
    sweeps: &[(DivisorChainPhi<Integer>, SweepReport)],
    all_pairs_limit: usize,
    sampled_pairs: usize,
    seed: u64,
) -> CheckOutcome {
    timed("members are closed under products and inverses", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (mut products, mut inverses, mut failures) = (0u64, 0u64, 0u64);
        for (phi, report) in sweeps {
            let oracle = MembershipOracle::new(phi)?;
            let size = report.ring_size;
            let n = report.n;
            let decode = |mut code: u64| {
                let mut a = vec![0u16; n * n];
                for k in (0..n * n).rev() {
                    a[k] = (code % size as u64) as u16;
                    code /= size as u64;
                }
                oracle.matrix_of(&a)
            };
            let is_listed = |h: &MatrixRm<Integer>| report.members.binary_search(&encode(&oracle.indices_of(h), size)).is_ok();
            let members = &report.members;
            for &code in members {
                inverses += 1;
                if !is_listed(&decode(code).inverse()?) {
                    failures += 1;
                }
            }
            let mut check_product = |x: u64, y: u64| -> Result<()> {
                products += 1;
                if !is_listed(&decode(x).mat_mul(&decode(y))?) {
                    failures += 1;
                }
                Ok(())
            };
            if members.len() <= all_pairs_limit {
                for &x in members {
                    for &y in members {
                        check_product(x, y)?;
                    }
                }
            } else {
                for _ in 0..sampled_pairs {
                    let x = members[rng.gen_range(0..members.len())];
                    let y = members[rng.gen_range(0..members.len())];
                    check_product(x, y)?;
                }
            }
        }
        Ok((failures == 0 && inverses > 0, format!("{inverses} inverses and {products} products checked, {failures} outside the member set")))
    })
}

/// Exact expansion checks for `n` in `ns` and integer substitutions.
pub fn symdet_battery(ns: std::ops::RangeInclusive<usize>, substitutions: usize, seed: u64) -> CheckOutcome {
    timed("permutation-term identities", || {
        let mut ok = true;
        let mut parts = Vec::new();
        for n in ns {
            let l3 = symdet::lemma3_report(n)?;
            let l4 = symdet::lemma4_report(n)?;
            let numeric = symdet::numeric_cross_check(n, substitutions, seed + n as u64)?;
            ok &= l3.holds && l4.holds && numeric;
            parts.push(format!(
                "n={n}: {} terms, transpose/inverse {}, pairing {} ({} monomials), numeric {}",
                l3.terms,
                pass(l3.holds),
                pass(l4.holds),
                l4.det_terms,
                pass(numeric)
            ));
        }
        Ok((ok, parts.join("; ")))
    })
}

fn pass(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

/// `U A V = D` with unimodular `U`, `V` and a divisor-chain diagonal `D`.
pub fn snf_battery(count: usize, seed: u64) -> CheckOutcome {
    timed("Smith normal form", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut failures = 0;
        for _ in 0..count {
            let n = rng.gen_range(1..=4);
            let rows = (0..n)
                .map(|_| (0..n).map(|_| Integer::from(rng.gen_range(-50i64..=50))).collect())
                .collect();
            let a = DomainMatrix::from_rows(rows)?;
            let snf = smith_normal_form(&a);
            let product = snf.u.mat_mul(&a)?.mat_mul(&snf.v)?;
            let diag = snf.d.diagonal();
            let ok = product == snf.d
                && snf.d.is_diagonal()
                && snf.u.det().is_unit()
                && snf.v.det().is_unit()
                && diag.windows(2).all(|w| divides(&w[0], &w[1]))
                && diag.iter().all(|x| !x.is_negative())
                && snf.d.det().abs() == a.det().abs();
            if !ok {
                failures += 1;
            }
        }
        Ok((failures == 0, format!("{} of {count} random matrices ok", count - failures)))
    })
}

/// Runs every battery at the given level.
pub fn run(level: Level) -> Vec<CheckOutcome> {
    let full = level == Level::Full;
    let mut out = vec![
        z36_vectors(),
        z144_vectors(),
        chain_battery(if full { 1000 } else { 100 }, 1),
        transfer_battery(if full { 1000 } else { 100 }, 2),
    ];
    let start = Instant::now();
    match sweep_all(level) {
        Ok(sweeps) => {
            let reports: Vec<SweepReport> = sweeps.iter().map(|(_, r)| r.clone()).collect();
            out.push(equivalence_outcome(&reports, start.elapsed()));
            out.push(witness_outcome(&reports, if full { 1000 } else { 100 }, 3));
            out.push(closure_outcome(&sweeps, 1000, 100_000, 4));
        }
        Err(e) => out.push(CheckOutcome {
            name: "oracle = entrywise = structural membership".into(),
            passed: false,
            detail: format!("error: {e}"),
            elapsed: start.elapsed(),
        }),
    }
    out.push(symdet_battery(2..=if full { 7 } else { 6 }, if full { 100 } else { 10 }, 5));
    out.push(snf_battery(if full { 1000 } else { 100 }, 6));
    out
}
