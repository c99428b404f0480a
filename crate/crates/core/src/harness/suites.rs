use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::report::{Instance, Kind, Report};
use crate::enumerate::{fold_permutations, involutions, permutations};
use crate::error::{Error, Result};
use crate::fs_action::{class_polys, involution_f, is_action_invariant, orbit, phi_prime};
use crate::limits;
use crate::mahonian::{ev_set, euler_mahonian, theta, veh_prime};
use crate::patterns::{
    avoiders_231, check_divisibility, check_mahonian, check_narayana, check_pq_symmetry, count_13_2,
    count_13_2_by_turns, count_2_31, count_2_31_by_turns,
};
use crate::poly::{gamma_expand, gessel_expand, BiPoly, UniPoly};
use crate::posets::{canonical_corpus, two_chain, v_poset, LabeledPoset};
use crate::stack_sort::{enumerate_r_sortable, stack_sort, stack_sort_via_slides};
use crate::trees::{dyck_path, dyck_paths, kreweras_stats, odd_set, phi_cap, psi, psi_prime, psi_prime_recursive, redge_set, veh, veh_alternating_sum};
use crate::word::{Boundary, Word};

macro_rules! suites {
    ($($variant:ident => $id:literal, $kind:ident, $default:literal;)*) => {
        /// The verification suites, one per theorem or conjecture.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum Suite {
            $($variant,)*
        }

        impl Suite {
            pub const ALL: &'static [Suite] = &[$(Suite::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Suite::$variant => $id,)*
                }
            }

            pub fn kind(self) -> Kind {
                match self {
                    $(Suite::$variant => Kind::$kind,)*
                }
            }

            /// Bound used when none is given. For `wp` it is the poset size.
            pub fn default_max_n(self) -> usize {
                match self {
                    $(Suite::$variant => $default,)*
                }
            }
        }
    };
}

suites! {
    Orb => "orb", Theorem, 8;
    Corre => "corre", Theorem, 8;
    StackInvariance => "stack-invariance", Theorem, 7;
    SlidesEqualRecursive => "slides-equal-recursive", Theorem, 8;
    Genbona => "genbona", Theorem, 8;
    Narayana => "narayana", Theorem, 9;
    ConstantPatterns => "constant-patterns", Theorem, 8;
    PqSymmetry => "pq-symmetry", Theorem, 7;
    MahonianS1S2 => "mahonian-s1s2", Theorem, 7;
    Wp => "wp", Theorem, 5;
    Psiphi => "psiphi", Theorem, 7;
    PsiPrime => "psi-prime", Theorem, 7;
    Kreweras => "kreweras", Theorem, 9;
    VehAltsum => "veh-altsum", Theorem, 8;
    Evt => "evt", Theorem, 8;
    EulerMahonian => "euler-mahonian", Theorem, 8;
    GuoZeng => "guo-zeng", Conjecture, 10;
    Gessel => "gessel", Conjecture, 6;
    Divisibility => "divisibility", Conjecture, 7;
    BrentiLogconcave => "brenti-logconcave", Conjecture, 10;
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.id() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

/// Runs a suite for every size up to `max_n`.
pub fn verify(suite: Suite, max_n: usize, opts: VerifyOptions) -> Result<Report> {
    limits::check(max_n)?;
    match opts.jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            pool.install(|| run(suite, max_n))
        }
        None => run(suite, max_n),
    }
}

/// Parses the suite id first.
pub fn verify_named(suite: &str, max_n: usize, opts: VerifyOptions) -> Result<Report> {
    verify(suite.parse()?, max_n, opts)
}

fn run(suite: Suite, max_n: usize) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new(suite.id(), suite.kind(), max_n);
    let instances = match suite {
        Suite::Orb => orb(max_n),
        Suite::Corre => corre(max_n)?,
        Suite::StackInvariance => stack_invariance(max_n),
        Suite::SlidesEqualRecursive => slides_equal_recursive(max_n),
        Suite::Genbona => genbona(max_n)?,
        Suite::Narayana => narayana(max_n)?,
        Suite::ConstantPatterns => constant_patterns(max_n),
        Suite::PqSymmetry => pq_symmetry(max_n)?,
        Suite::MahonianS1S2 => mahonian_s1s2(max_n)?,
        Suite::Wp => wp(max_n)?,
        Suite::Psiphi => psiphi(max_n),
        Suite::PsiPrime => psi_prime_suite(max_n)?,
        Suite::Kreweras => kreweras(max_n)?,
        Suite::VehAltsum => veh_altsum(max_n)?,
        Suite::Evt => evt(max_n),
        Suite::EulerMahonian => euler_mahonian_suite(max_n)?,
        Suite::GuoZeng => guo_zeng(max_n)?,
        Suite::Gessel => gessel(max_n)?,
        Suite::Divisibility => divisibility(max_n)?,
        Suite::BrentiLogconcave => brenti(max_n)?,
    };
    for inst in instances {
        report.push(inst);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Checks every permutation of `[n]` in parallel; `check` returns a message on
/// failure.
fn each_permutation<F>(n: usize, check: F) -> (u64, Vec<String>)
where
    F: Fn(&Word) -> Option<String> + Sync + Send,
{
    fold_permutations(
        n,
        || (0u64, Vec::new()),
        |(c, mut bad), p| {
            if let Some(msg) = check(p) {
                bad.push(msg);
            }
            (c + 1, bad)
        },
        |(c1, mut b1), (c2, b2)| {
            b1.extend(b2);
            (c1 + c2, b1)
        },
    )
}

fn each_word<F>(words: &[Word], check: F) -> (u64, Vec<String>)
where
    F: Fn(&Word) -> Option<String> + Sync + Send,
{
    let bad: Vec<String> = words.par_iter().filter_map(&check).collect();
    (words.len() as u64, bad)
}

fn per_permutation<F>(max_n: usize, label: &str, check: F) -> Vec<Instance>
where
    F: Fn(&Word) -> Option<String> + Sync + Send,
{
    (1..=max_n)
        .map(|n| {
            let (c, bad) = each_permutation(n, &check);
            Instance::theorem(format!("n={n} {label}"), c, bad)
        })
        .collect()
}

fn err_or<T>(r: Result<T>, f: impl FnOnce(T) -> Option<String>) -> Option<String> {
    match r {
        Ok(v) => f(v),
        Err(e) => Some(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// orbits and classes

fn orb(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut bad = Vec::new();
        let mut orbits = 0u64;
        for p in permutations(n) {
            if seen.contains(&p) {
                continue;
            }
            orbits += 1;
            match orbit(&p, Boundary::Top) {
                Ok(r) => {
                    if !r.members.len().is_power_of_two() {
                        bad.push(format!("orbit of {p} has {} members", r.members.len()));
                    }
                    let k = p.peak(Boundary::Top);
                    if let Some(m) = r.members.iter().find(|m| m.peak(Boundary::Top) != k) {
                        bad.push(format!("peak not constant: {p} vs {m}"));
                    }
                    seen.extend(r.members);
                }
                Err(e) => {
                    bad.push(e.to_string());
                    seen.insert(p);
                }
            }
        }
        out.push(Instance::theorem(format!("n={n} orbit polynomials"), orbits, bad));
        let (c, bad) = each_permutation(n, |p| {
            let f = involution_f(p);
            (f.des() + p.des() != n - 1).then(|| format!("des f({p}) + des {p} != {}", n - 1))
        });
        out.push(Instance::theorem(format!("n={n} des f + des = n-1"), c, bad));
    }
    out
}

#[derive(Serialize)]
struct ClassData {
    w: String,
    wbar: String,
    b: Vec<String>,
}

fn class_instance(label: String, words: &[Word]) -> Instance {
    match class_polys(words, Boundary::Top) {
        Ok(c) => {
            let ok = c.b.iter().all(|x| !x.is_negative());
            Instance::check(label, Kind::Theorem, ok, || format!("negative b: {:?}", c.b)).with_data(ClassData {
                w: c.descent.to_string(),
                wbar: c.peak.to_string(),
                b: c.b.iter().map(|x| x.to_string()).collect(),
            })
        }
        Err(e) => Instance::theorem(label, 1, vec![e.to_string()]),
    }
}

fn corre(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let all: Vec<Word> = permutations(n).collect();
        out.push(class_instance(format!("n={n} S_n"), &all));
        out.push(class_instance(format!("n={n} S_n(231)"), &avoiders_231(n)?));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// stack sorting

fn stack_invariance(max_n: usize) -> Vec<Instance> {
    per_permutation(max_n, "S constant on orbits", |p| {
        let s = stack_sort(p);
        p.letters().iter().find_map(|&x| {
            let q = phi_prime(p, x, Boundary::Top).ok()?;
            (stack_sort(&q) != s).then(|| format!("S({q}) != S({p})"))
        })
    })
}

fn slides_equal_recursive(max_n: usize) -> Vec<Instance> {
    per_permutation(max_n, "slides = S", |p| {
        let a = stack_sort_via_slides(p);
        let b = stack_sort(p);
        (a != b).then(|| format!("{p}: slides give {a}, S gives {b}"))
    })
}

fn genbona(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        // S_n^0 = {12...n} is not invariant once n >= 2
        for r in 1..n.max(2) {
            let class = enumerate_r_sortable(n, r)?;
            let label = format!("n={n} r={r}");
            let inv = is_action_invariant(&class, Boundary::Top);
            out.push(Instance::check(format!("{label} invariant"), Kind::Theorem, inv, || {
                format!("S_{n}^{r} is not invariant")
            }));
            out.push(class_instance(format!("{label} b_i"), &class));
        }
    }
    Ok(out)
}

fn narayana(max_n: usize) -> Result<Vec<Instance>> {
    (1..=max_n)
        .map(|n| {
            let c = check_narayana(n)?;
            let ok = c.polys_agree && c.peak_counts_agree;
            Ok(Instance::check(format!("n={n}"), Kind::Theorem, ok, || {
                format!("closed form {} vs enumerated {}, peak counts {:?}", c.closed_form, c.enumerated, c.peak_counts)
            })
            .with_data(serde_json::json!({
                "poly": c.closed_form.to_string(),
                "gamma": c.gamma,
            })))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// patterns

fn constant_patterns(max_n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let (c, bad) = each_permutation(n, |p| {
            let s = (count_2_31(p), count_13_2(p));
            if s != (count_2_31_by_turns(p), count_13_2_by_turns(p)) {
                return Some(format!("{p}: pair scan and turn triples disagree"));
            }
            // each orbit is generated by the φ'_x, so checking neighbors suffices
            p.letters().iter().find_map(|&x| {
                let q = phi_prime(p, x, Boundary::Top).ok()?;
                ((count_2_31(&q), count_13_2(&q)) != s).then(|| format!("{p} -> {q} changes the statistics"))
            })
        });
        out.push(Instance::theorem(format!("n={n} constant on orbits"), c, bad));
        let (c, bad) = each_permutation(n, |p| {
            let q = involution_f(p).reverse();
            let lhs = (q.des(), count_13_2(&q), count_2_31(&q));
            let rhs = (p.des(), count_2_31(p), count_13_2(p));
            (lhs != rhs).then(|| format!("{p}: R(f(π)) = {q}"))
        });
        out.push(Instance::theorem(format!("n={n} R∘f swaps (2-31) and (13-2)"), c, bad));
    }
    out
}

fn pq_symmetry(max_n: usize) -> Result<Vec<Instance>> {
    (1..=max_n)
        .map(|n| {
            let ok = check_pq_symmetry(n)?;
            Ok(Instance::check(format!("n={n}"), Kind::Theorem, ok, || format!("A_{n}(p,q,t) != A_{n}(q,p,t)")))
        })
        .collect()
}

fn mahonian_s1s2(max_n: usize) -> Result<Vec<Instance>> {
    (1..=max_n)
        .map(|n| {
            let c = check_mahonian(n)?;
            Ok(Instance::check(format!("n={n}"), Kind::Theorem, c.holds, || {
                format!("A(q,q²,q) = {}, A(q²,q,q) = {}, [n]_q! = {}", c.s1, c.s2, c.q_factorial)
            }))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// posets

fn check_poset(p: &LabeledPoset) -> (u64, Vec<String>) {
    let mut bad = Vec::new();
    let mut checked = 0u64;
    let tag = || p.to_json();
    let g = match p.sign_grading() {
        Ok(g) => g,
        Err(e) => return (1, vec![format!("{}: {e}", tag())]),
    };
    match p.orbits() {
        Ok(orbits) => {
            for o in &orbits {
                checked += 1;
                if g.r == 0 {
                    let k = o.rep.des();
                    if let Some(m) = o.members.iter().find(|m| m.peak(Boundary::Zero) != k) {
                        bad.push(format!("{}: peak({m}) != des(rep) = {k}", tag()));
                    }
                }
            }
        }
        Err(e) => bad.push(format!("{}: {e}", tag())),
    }
    match p.wp_polynomial() {
        Ok(w) if !w.agree => bad.push(format!("{}: a_i by gamma {:?} vs by peaks {:?}", tag(), w.a_gamma.gamma, w.a_peak)),
        Ok(_) => {}
        Err(e) => bad.push(format!("{}: {e}", tag())),
    }
    // ψ_x are commuting involutions on L(P,ω)
    if let Ok(ext) = p.linear_extensions() {
        for pi in &ext {
            for &x in p.labels() {
                let Ok(a) = p.psi_x(pi, x) else {
                    bad.push(format!("{}: ψ_{x}({pi}) failed", tag()));
                    continue;
                };
                checked += 1;
                if p.psi_x(&a, x).ok().as_ref() != Some(pi) {
                    bad.push(format!("{}: ψ_{x} is not an involution at {pi}", tag()));
                }
                for &y in p.labels().iter().filter(|&&y| y > x) {
                    let xy = p.psi_x(&a, y).ok();
                    let yx = p.psi_x(pi, y).and_then(|b| p.psi_x(&b, x)).ok();
                    if xy != yx {
                        bad.push(format!("{}: ψ_{x} and ψ_{y} do not commute at {pi}", tag()));
                    }
                }
            }
        }
    }
    (checked, bad)
}

fn wp(max_size: usize) -> Result<Vec<Instance>> {
    let corpus = canonical_corpus(max_size)?;
    let mut out = Vec::new();
    for (name, p) in [("V-poset", v_poset()), ("2-chain", two_chain())] {
        let (c, bad) = check_poset(&p);
        out.push(Instance::theorem(format!("fixture {name}"), c, bad));
    }
    for size in 1..=max_size {
        let group: Vec<&LabeledPoset> = corpus.iter().filter(|p| p.len() == size).collect();
        let results: Vec<(u64, Vec<String>)> = group.par_iter().map(|p| check_poset(p)).collect();
        let checked = results.iter().map(|r| r.0).sum();
        let bad = results.into_iter().flat_map(|r| r.1).collect();
        out.push(Instance::theorem(format!("|P|={size} ({} posets)", group.len()), checked, bad));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// trees

fn psiphi(max_n: usize) -> Vec<Instance> {
    per_permutation(max_n, "Φ∘Ψ = Ψ∘Φ = id, Odd = Redge∘Ψ", |p| {
        let s = psi(p);
        let f = phi_cap(p);
        if phi_cap(&s) != *p || psi(&f) != *p {
            return Some(format!("{p}: Ψ = {s}, Φ = {f}"));
        }
        if odd_set(p) != redge_set(&s) || redge_set(p) != odd_set(&f) {
            return Some(format!("{p}: Odd/Redge mismatch"));
        }
        None
    })
}

fn psi_prime_suite(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for r in 0..n {
            let class = enumerate_r_sortable(n, r)?;
            let members: HashSet<&Word> = class.iter().collect();
            let images: Vec<Word> = class.par_iter().map(psi_prime).collect();
            let mut bad = Vec::new();
            for (p, q) in class.iter().zip(&images) {
                if !members.contains(q) {
                    bad.push(format!("Ψ'({p}) = {q} leaves S_{n}^{r}"));
                }
                if q.des() != veh(p) {
                    bad.push(format!("des Ψ'({p}) = {} but veh = {}", q.des(), veh(p)));
                }
                if *q != psi_prime_recursive(p) {
                    bad.push(format!("Ψ'({p}) disagrees with the recursion"));
                }
            }
            let distinct: HashSet<&Word> = images.iter().collect();
            if distinct.len() != images.len() {
                bad.push(format!("Ψ' is not injective on S_{n}^{r}"));
            }
            let mut a: Vec<usize> = class.iter().map(veh).collect();
            let mut b: Vec<usize> = class.iter().map(Word::des).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                bad.push(format!("veh and des differ in distribution on S_{n}^{r}"));
            }
            out.push(Instance::theorem(format!("n={n} r={r}"), class.len() as u64, bad));
        }
    }
    Ok(out)
}

fn kreweras(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let paths = dyck_paths(n);
        let mut even: BTreeMap<usize, u64> = BTreeMap::new();
        let mut double: BTreeMap<usize, u64> = BTreeMap::new();
        for p in &paths {
            let (e, d) = kreweras_stats(p);
            *even.entry(e).or_default() += 1;
            *double.entry(d).or_default() += 1;
        }
        out.push(
            Instance::check(format!("n={n} equidistribution"), Kind::Theorem, even == double, || {
                format!("even-height {even:?} vs double up-steps {double:?}")
            })
            .with_data(serde_json::json!({ "paths": paths.len(), "distribution": even.values().collect::<Vec<_>>() })),
        );
        let avoiders = avoiders_231(n)?;
        let (c, mut bad) = each_word(&avoiders, |p| {
            err_or(dyck_path(p), |path| {
                (kreweras_stats(&path) != (veh(p), p.des())).then(|| format!("{p} -> {path}"))
            })
        });
        let images: HashSet<String> = avoiders.iter().filter_map(|p| dyck_path(p).ok()).map(|d| d.to_string()).collect();
        if images.len() != paths.len() {
            bad.push(format!("{} distinct images, {} Dyck paths", images.len(), paths.len()));
        }
        out.push(Instance::theorem(format!("n={n} pullback to (veh, des)"), c, bad));
    }
    Ok(out)
}

fn veh_altsum(max_n: usize) -> Result<Vec<Instance>> {
    (1..=max_n)
        .map(|n| {
            let (c, bad) = each_word(&avoiders_231(n)?, |p| {
                let (a, b) = (veh(p) as i64, veh_alternating_sum(p));
                (a != b).then(|| format!("{p}: veh {a}, alternating sum {b}"))
            });
            Ok(Instance::theorem(format!("n={n}"), c, bad))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Mahonian

fn evt(max_n: usize) -> Vec<Instance> {
    let mut out = per_permutation(max_n, "EV∘Θ = Des", |p| {
        let t = theta(p);
        (ev_set(&t) != p.descent_set()).then(|| format!("{p}: Θ = {t}"))
    });
    for n in 1..=max_n {
        let images: HashSet<Word> = permutations(n).map(|p| theta(&p)).collect();
        let total = permutations(n).count();
        out.push(Instance::check(format!("n={n} Θ bijective"), Kind::Theorem, images.len() == total, || {
            format!("{} images for {total} permutations", images.len())
        }));
    }
    out
}

fn euler_mahonian_suite(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let e = euler_mahonian(n)?;
        out.push(Instance::check(format!("n={n} (veh', SIVEH) ~ (des, MAJ)"), Kind::Theorem, e.equal, || {
            format!("{} vs {}", e.veh_siveh, e.des_maj)
        }));
        type Dist = HashMap<usize, u64>;
        let (d, v, vp) = fold_permutations(
            n,
            || (Dist::new(), Dist::new(), Dist::new()),
            |(mut d, mut v, mut vp), p| {
                *d.entry(p.des()).or_default() += 1;
                *v.entry(veh(p)).or_default() += 1;
                *vp.entry(veh_prime(p)).or_default() += 1;
                (d, v, vp)
            },
            |(mut a, mut b, mut c), (x, y, z)| {
                x.into_iter().for_each(|(k, n)| *a.entry(k).or_default() += n);
                y.into_iter().for_each(|(k, n)| *b.entry(k).or_default() += n);
                z.into_iter().for_each(|(k, n)| *c.entry(k).or_default() += n);
                (a, b, c)
            },
        );
        out.push(Instance::check(format!("n={n} veh ~ veh' ~ des"), Kind::Theorem, d == v && d == vp, || {
            "distributions differ".into()
        }));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// conjectures

fn involution_poly(n: usize) -> Result<UniPoly> {
    Ok(UniPoly::from_exponents(['t'], involutions(n)?.iter().map(|p| [p.des() as u32])))
}

fn guo_zeng(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let poly = involution_poly(n)?;
        match gamma_expand(&poly, n as u32 - 1) {
            Ok(g) => {
                let ok = g.is_nonnegative();
                out.push(
                    Instance::check(format!("n={n} γ(I_n) >= 0"), Kind::Conjecture, ok, || format!("γ = {:?}", g.gamma))
                        .with_data(serde_json::json!({ "I_n": poly.to_string(), "gamma": g })),
                );
            }
            Err(e) => out.push(Instance::theorem(format!("n={n} I_n symmetric"), 1, vec![e.to_string()])),
        }
    }
    Ok(out)
}

/// `Σ_π s^{des π} t^{des(π^{-1} τ)}`.
pub fn gessel_polynomial(tau: &Word, inverses: &[Word]) -> BiPoly {
    let mut counts: HashMap<[u32; 2], u64> = HashMap::new();
    for inv in inverses {
        let pi = inv.inverse().expect("permutation");
        let sigma = inv.compose(tau).expect("same size");
        *counts.entry([pi.des() as u32, sigma.des() as u32]).or_default() += 1;
    }
    BiPoly::from_terms(['s', 't'], counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}

fn gessel(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        limits::check(n)?;
        let inverses: Vec<Word> = permutations(n).map(|p| p.inverse().expect("permutation")).collect();
        // first τ (lexicographically) with each descent number
        let mut reps: BTreeMap<usize, Word> = BTreeMap::new();
        for t in permutations(n) {
            reps.entry(t.des()).or_insert(t);
        }
        let polys: BTreeMap<usize, BiPoly> = reps.iter().map(|(&k, t)| (k, gessel_polynomial(t, &inverses))).collect();
        for (k, tau) in &reps {
            let f = &polys[k];
            match gessel_expand(f, n as u32) {
                Ok(exp) => {
                    let exact = exp.reconstruct() == *f;
                    out.push(Instance::check(format!("n={n} des τ={k} integral expansion"), Kind::Theorem, exact, || {
                        format!("τ = {tau}: expansion does not reconstruct F")
                    }));
                    let neg = exp.negative_entries();
                    out.push(
                        Instance::conjecture(
                            format!("n={n} des τ={k} c_n(τ;k,j) >= 0"),
                            1,
                            neg.iter().map(|(a, b)| format!("τ = {tau}: c({a},{b}) = {}", exp.coeff(*a, *b))).collect(),
                        )
                        .with_data(&exp),
                    );
                }
                Err(e) => out.push(Instance::theorem(format!("n={n} des τ={k} integral expansion"), 1, vec![format!("τ = {tau}: {e}")])),
            }
        }
        let all: Vec<Word> = permutations(n).collect();
        let (c, bad) = each_word(&all, |t| {
            (gessel_polynomial(t, &inverses) != polys[&t.des()]).then(|| format!("τ = {t} differs from its descent class"))
        });
        out.push(Instance::theorem(format!("n={n} depends only on des τ"), c, bad));
    }
    Ok(out)
}

fn divisibility(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for c in check_divisibility(n)? {
            let i = c.i;
            out.push(
                Instance::check(format!("n={n} i={i} (p+q)^{i} | b_(n,i)"), Kind::Conjecture, c.divisible, || {
                    format!("remainder {}", c.remainder)
                })
                .with_data(serde_json::json!({ "b": c.b.to_string(), "quotient": c.quotient.to_string() })),
            );
        }
    }
    Ok(out)
}

fn brenti(max_n: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let poly = involution_poly(n)?;
        let c: Vec<BigInt> = (0..n as u32).map(|k| poly.coeff_at(k)).collect();
        let shown = || format!("I_{n} coefficients {:?}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        let symmetric = (0..n).all(|k| c[k] == c[n - 1 - k]);
        out.push(Instance::check(format!("n={n} symmetry"), Kind::Theorem, symmetric, shown));
        let peak = (0..n).max_by_key(|&k| (&c[k], std::cmp::Reverse(k))).unwrap_or(0);
        let unimodal = (1..=peak).all(|k| c[k - 1] <= c[k]) && (peak + 1..n).all(|k| c[k - 1] >= c[k]);
        out.push(Instance::check(format!("n={n} unimodal"), Kind::Conjecture, unimodal, shown));
        let log_concave = (1..n.saturating_sub(1)).all(|k| &c[k] * &c[k] >= &c[k - 1] * &c[k + 1]);
        out.push(Instance::check(format!("n={n} log-concave"), Kind::Conjecture, log_concave, shown));
        let nz: Vec<usize> = (0..n).filter(|&k| !c[k].is_zero()).collect();
        let no_gaps = nz.windows(2).all(|w| w[1] == w[0] + 1);
        out.push(Instance::check(format!("n={n} no internal zeros"), Kind::Conjecture, no_gaps, shown));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        assert_eq!(Suite::ALL.len(), 20);
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>().unwrap(), *s);
        }
        assert_eq!("nope".parse::<Suite>(), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn every_suite_passes_small() {
        for s in Suite::ALL {
            let r = verify(*s, 4, VerifyOptions::default()).unwrap();
            assert!(r.passed(), "{}", r.summary());
            assert!(!r.instances.is_empty());
        }
    }

    #[test]
    fn gessel_fixture() {
        let inverses: Vec<Word> = permutations(3).map(|p| p.inverse().unwrap()).collect();
        let f = gessel_polynomial(&Word::identity(3), &inverses);
        let expected = BiPoly::from_terms(['s', 't'], [([0, 0], 1.into()), ([1, 1], 4.into()), ([2, 2], 1.into())]);
        assert_eq!(f, expected);
    }

    #[test]
    fn involution_fixtures() {
        assert_eq!(involution_poly(3).unwrap(), UniPoly::from_coeffs('t', &[1, 2, 1]));
        assert_eq!(involution_poly(4).unwrap(), UniPoly::from_coeffs('t', &[1, 4, 4, 1]));
        let g = gamma_expand(&involution_poly(4).unwrap(), 3).unwrap();
        assert_eq!(g.gamma, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(verify(Suite::Orb, 99, VerifyOptions::default()), Err(Error::BoundExceeded { .. })));
    }
}
