//! Instance generation for law checks: exhaustive below a budget, seeded
//! sampling above it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::{enumerate_graphs, MAX_ENUMERATION_SLOTS};
use crate::graphcat::Graph;
use crate::lawcheck::report::{instance_of, Counterexample, Instance, LawReport, Witness};
use crate::relcore::{is_cp, product_set, CpMorphism, FiniteSet, Relation};

/// Knobs shared by every law check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    /// Objects range over sets of size `0..=size_bound`.
    pub size_bound: usize,
    pub seed: u64,
    /// A family of instances is enumerated when its size is at most this.
    pub exhaustive_limit: u64,
    /// Instances drawn for a family above the limit.
    pub samples: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { size_bound: 2, seed: 0, exhaustive_limit: 2_000_000, samples: 2_000 }
    }
}

impl CheckConfig {
    pub fn with_size_bound(size_bound: usize) -> Self {
        CheckConfig { size_bound, ..CheckConfig::default() }
    }

    /// The objects `S0, S1, ...` with `|Sk| = k`, up to `bound`.
    pub fn objects(bound: usize) -> Vec<FiniteSet> {
        (0..=bound).map(|k| FiniteSet::letters(&format!("S{k}"), k)).collect()
    }
}

/// Homsets materialized up to this many members.
const POOL_LIMIT: u128 = 1 << 16;

/// Morphism kinds that law checks can enumerate or sample.
pub trait Sample: Clone + Witness + Sized {
    /// Every morphism `dom → cod` in a deterministic order, or `None` when the
    /// homset is too large to list.
    fn enumerate(dom: &FiniteSet, cod: &FiniteSet) -> Option<Vec<Self>>;
    fn random(dom: &FiniteSet, cod: &FiniteSet, rng: &mut ChaCha8Rng) -> Self;
}

impl Sample for Graph {
    fn enumerate(dom: &FiniteSet, cod: &FiniteSet) -> Option<Vec<Self>> {
        let slots = dom.len() * cod.len();
        if slots > MAX_ENUMERATION_SLOTS {
            return None;
        }
        let size = crate::census::count_states(slots as u64);
        if size > POOL_LIMIT.into() {
            return None;
        }
        Some(enumerate_graphs(dom, cod).ok()?.collect())
    }

    fn random(dom: &FiniteSet, cod: &FiniteSet, rng: &mut ChaCha8Rng) -> Self {
        let slots: Vec<usize> = (0..dom.len() * cod.len()).filter(|_| rng.gen_bool(0.5)).collect();
        let nb = cod.len();
        let label = |s: usize| (dom.element(s / nb).clone(), cod.element(s % nb).clone());
        let mut edges = Vec::new();
        for (k, &s) in slots.iter().enumerate() {
            for &t in &slots[k + 1..] {
                if rng.gen_bool(0.5) {
                    edges.push((label(s), label(t)));
                }
            }
        }
        Graph::new(dom, cod, slots.iter().map(|&s| label(s)), edges).expect("sampled graph is well formed")
    }
}

impl Sample for Relation {
    fn enumerate(dom: &FiniteSet, cod: &FiniteSet) -> Option<Vec<Self>> {
        let bits = dom.len() * cod.len();
        (bits <= 16).then(|| (0..1u64 << bits).map(|m| Relation::from_mask(dom, cod, m)).collect())
    }

    fn random(dom: &FiniteSet, cod: &FiniteSet, rng: &mut ChaCha8Rng) -> Self {
        let coins: Vec<bool> = (0..dom.len() * cod.len()).map(|_| rng.gen_bool(0.5)).collect();
        Relation::from_fn(dom, cod, |i, j| coins[i * cod.len() + j])
    }
}

impl Sample for CpMorphism {
    /// Brute force: every relation `A×A → B×B` filtered by the CP axioms.
    fn enumerate(dom: &FiniteSet, cod: &FiniteSet) -> Option<Vec<Self>> {
        let aa = product_set(dom, dom);
        let bb = product_set(cod, cod);
        let bits = aa.len() * bb.len();
        (bits <= 16).then(|| {
            (0..1u64 << bits)
                .map(|m| Relation::from_mask(&aa, &bb, m))
                .filter(|r| is_cp(r).expect("product squares"))
                .map(|r| CpMorphism::new(dom, cod, r).expect("filtered by the axioms"))
                .collect()
        })
    }

    /// Closes a random set of tuples under both axioms.
    fn random(dom: &FiniteSet, cod: &FiniteSet, rng: &mut ChaCha8Rng) -> Self {
        let (na, nb) = (dom.len(), cod.len());
        let mut tuples = Vec::new();
        if na > 0 && nb > 0 {
            let count = rng.gen_range(0..=na * nb);
            for _ in 0..count {
                let t = (rng.gen_range(0..na), rng.gen_range(0..na), rng.gen_range(0..nb), rng.gen_range(0..nb));
                tuples.push(t);
            }
        }
        let rel = Relation::from_fn(&product_set(dom, dom), &product_set(cod, cod), |i, j| {
            let (a1, a2, b1, b2) = (i / na, i % na, j / nb, j % nb);
            tuples.iter().any(|&(x1, x2, y1, y2)| {
                (x1, x2, y1, y2) == (a1, a2, b1, b2)
                    || (x2, x1, y2, y1) == (a1, a2, b1, b2)
                    || ((x1, y1) == (a1, b1) || (x2, y2) == (a1, b1)) && a1 == a2 && b1 == b2
            })
        });
        CpMorphism::new(dom, cod, rel).expect("closure satisfies the axioms")
    }
}

/// A homset, listed when small enough.
pub struct Pool<T> {
    dom: FiniteSet,
    cod: FiniteSet,
    all: Option<Vec<T>>,
}

impl<T: Sample> Pool<T> {
    pub fn new(dom: &FiniteSet, cod: &FiniteSet) -> Self {
        Pool { dom: dom.clone(), cod: cod.clone(), all: T::enumerate(dom, cod) }
    }

    pub fn members(&self) -> Option<&[T]> {
        self.all.as_deref()
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> T {
        match &self.all {
            Some(all) => all[rng.gen_range(0..all.len())].clone(),
            None => T::random(&self.dom, &self.cod, rng),
        }
    }
}

/// All homsets between the objects `S0..=S{bound}`.
pub struct Catalogue<T> {
    objects: Vec<FiniteSet>,
    pools: Vec<Pool<T>>,
}

impl<T: Sample> Catalogue<T> {
    pub fn new(bound: usize) -> Self {
        let objects = CheckConfig::objects(bound);
        let pools =
            objects.iter().flat_map(|a| objects.iter().map(move |b| (a, b))).map(|(a, b)| Pool::new(a, b)).collect();
        Catalogue { objects, pools }
    }

    pub fn objects(&self) -> &[FiniteSet] {
        &self.objects
    }

    pub fn sizes(&self) -> std::ops::Range<usize> {
        0..self.objects.len()
    }

    pub fn pool(&self, a: usize, b: usize) -> &Pool<T> {
        &self.pools[a * self.objects.len() + b]
    }
}

fn law_seed(seed: u64, law: &str) -> u64 {
    // FNV-1a over the law name, mixed into the user seed
    let h = law.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    seed ^ h
}

/// Accumulates one law's instances and keeps the first violation.
pub struct Run<'c> {
    name: String,
    cfg: &'c CheckConfig,
    rng: ChaCha8Rng,
    checked: u64,
    sampled: bool,
    failure: Option<Counterexample>,
}

impl<'c> Run<'c> {
    pub fn new(name: &str, cfg: &'c CheckConfig) -> Self {
        Run {
            name: name.to_string(),
            cfg,
            rng: ChaCha8Rng::seed_from_u64(law_seed(cfg.seed, name)),
            checked: 0,
            sampled: false,
            failure: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.failure.is_some()
    }

    /// Records one instance. The witness is only built on failure.
    pub fn check(&mut self, outcome: Result<(), String>, witness: impl FnOnce() -> Instance) {
        let ordinal = self.checked;
        self.checked += 1;
        if let Err(detail) = outcome {
            if self.failure.is_none() {
                self.failure = Some(Counterexample { ordinal, detail, instance: witness() });
            }
        }
    }

    /// Runs `law` over every tuple drawn from `pools`, or over a seeded sample
    /// when the family is too large. Stops at the first violation.
    pub fn over<T: Sample, const K: usize>(
        &mut self,
        pools: [&Pool<T>; K],
        mut law: impl FnMut([&T; K]) -> Result<(), String>,
    ) {
        if self.failed() {
            return;
        }
        let listed: Option<Vec<&[T]>> = pools.iter().map(|p| p.members()).collect();
        let total =
            listed.as_ref().and_then(|l| l.iter().try_fold(1u64, |acc, members| acc.checked_mul(members.len() as u64)));
        match (listed, total) {
            (Some(lists), Some(total)) if total <= self.cfg.exhaustive_limit => {
                if lists.iter().any(|l| l.is_empty()) {
                    return;
                }
                let mut idx = [0usize; K];
                loop {
                    let args: [&T; K] = std::array::from_fn(|i| &lists[i][idx[i]]);
                    let outcome = law(args);
                    self.check(outcome, || tuple_instance(&args));
                    if self.failed() {
                        return;
                    }
                    // odometer, last index fastest
                    let mut k = K;
                    loop {
                        if k == 0 {
                            return;
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < lists[k].len() {
                            break;
                        }
                        idx[k] = 0;
                    }
                }
            }
            _ => {
                self.sampled = true;
                for _ in 0..self.cfg.samples {
                    let owned: [T; K] = std::array::from_fn(|i| pools[i].draw(&mut self.rng));
                    let args: [&T; K] = std::array::from_fn(|i| &owned[i]);
                    let outcome = law(args);
                    self.check(outcome, || tuple_instance(&args));
                    if self.failed() {
                        return;
                    }
                }
            }
        }
    }

    pub fn finish(self) -> LawReport {
        LawReport {
            law_name: self.name,
            size_bound: self.cfg.size_bound,
            instances_checked: self.checked,
            passed: self.failure.is_none(),
            counterexample: self.failure,
            seed: self.sampled.then_some(self.cfg.seed),
        }
    }
}

fn tuple_instance<T: Witness>(args: &[&T]) -> Instance {
    let items: Vec<&dyn Witness> = args.iter().map(|a| a as &dyn Witness).collect();
    instance_of(&items)
}

/// `Ok` when `lhs == rhs`, otherwise a message naming both sides.
pub fn expect_equal<T: PartialEq + std::fmt::Debug>(what: &str, lhs: &T, rhs: &T) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs:?} != {rhs:?}"))
    }
}
