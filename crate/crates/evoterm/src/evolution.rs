//! The adaptive evolutionary loop and the classic-GP baseline.
//!
//! Each individual carries its own operator-rate vector. Per iteration
//! every individual selects one operator by roulette over its rates,
//! applies it (binary operators mate with a tournament winner, composition
//! with the background knowledge), and keeps the child only when strictly
//! fitter; the selected operator is rewarded or punished multiplicatively
//! by a freshly drawn uniform learning rate. The baseline loop uses only
//! the two classic tree operators at equal probability, with the same
//! steady-state replacement.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dataset::Dataset;
use crate::generalize::{self, EmptyPool};
use crate::operators::{Limits, OpContext, OperatorId, apply_operator};
use crate::program::Program;
use crate::rewrite::{EvalBudget, deduces};

/// An exact fraction in [0, 1]; kept unreduced so `3/6` prints as such.
/// Comparison is by cross-multiplication.
#[derive(Debug, Clone, Copy)]
pub struct Fraction {
    pub num: u32,
    pub den: u32,
}

impl Fraction {
    pub fn new(num: u32, den: u32) -> Fraction {
        assert!(den > 0, "fraction denominator must be positive");
        Fraction { num, den }
    }

    pub fn zero(den: u32) -> Fraction {
        Fraction::new(0, den)
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Fraction) -> bool {
        u64::from(self.num) * u64::from(other.den) == u64::from(other.num) * u64::from(self.den)
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Fraction) -> std::cmp::Ordering {
        (u64::from(self.num) * u64::from(other.den))
            .cmp(&(u64::from(other.num) * u64::from(self.den)))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Fraction of the deduplicated example union that the program deduces.
pub fn covering_factor(program: &Program, dataset: &Dataset, budget: EvalBudget) -> Fraction {
    let examples = dataset.union_examples();
    let den = examples.len() as u32;
    let num = examples
        .iter()
        .filter(|e| deduces(program, &dataset.background, e, budget))
        .count() as u32;
    Fraction::new(num, den)
}

/// Per-individual probability vector over the operator set. Always
/// normalized to sum 1, with every rate floored away from zero so the
/// multiplicative punishment cannot extinguish an operator permanently.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorRates {
    rates: [f64; 9],
}

pub const RATE_FLOOR: f64 = 1e-4;

impl OperatorRates {
    /// Rates drawn from U(0,1) and normalized.
    pub fn init_uniform(rng: &mut impl Rng) -> OperatorRates {
        let mut rates = [0.0; 9];
        for r in rates.iter_mut() {
            *r = rng.random::<f64>();
        }
        let mut out = OperatorRates { rates };
        out.floor_and_normalize();
        out
    }

    pub fn get(&self, op: OperatorId) -> f64 {
        self.rates[op.index()]
    }

    pub fn as_array(&self) -> &[f64; 9] {
        &self.rates
    }

    pub fn sum(&self) -> f64 {
        self.rates.iter().sum()
    }

    /// Roulette selection over the rates.
    pub fn select(&self, rng: &mut impl Rng) -> OperatorId {
        let draw: f64 = rng.random::<f64>() * self.sum();
        let mut acc = 0.0;
        for op in OperatorId::ALL {
            acc += self.rates[op.index()];
            if draw < acc {
                return op;
            }
        }
        *OperatorId::ALL.last().unwrap()
    }

    pub fn reward(&mut self, op: OperatorId, learning_rate: f64) {
        self.rates[op.index()] *= 1.0 + learning_rate;
    }

    pub fn punish(&mut self, op: OperatorId, learning_rate: f64) {
        self.rates[op.index()] *= 1.0 - learning_rate;
    }

    pub fn floor_and_normalize(&mut self) {
        for r in self.rates.iter_mut() {
            if *r < RATE_FLOOR {
                *r = RATE_FLOOR;
            }
        }
        let total: f64 = self.rates.iter().sum();
        for r in self.rates.iter_mut() {
            *r /= total;
        }
    }
}

#[derive(Debug, Clone)]
pub struct Individual {
    pub program: Program,
    pub rates: OperatorRates,
    pub fitness: Fraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    HaEa,
    Gp,
}

impl Algorithm {
    pub fn label(self) -> &'static str {
        match self {
            Algorithm::HaEa => "haea",
            Algorithm::Gp => "gp",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "haea" => Ok(Algorithm::HaEa),
            "gp" => Ok(Algorithm::Gp),
            other => Err(format!(
                "unknown algorithm `{}` (expected haea or gp)",
                other
            )),
        }
    }
}

/// How a child is chosen among a multi-candidate operator outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChildSelection {
    /// One uniform draw; exactly one fitness evaluation per step.
    #[default]
    Uniform,
    /// Evaluate every candidate and keep the fittest.
    Best,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algorithm: Algorithm,
    pub min_population: usize,
    pub max_iterations: usize,
    pub limits: Limits,
    pub budget: EvalBudget,
    pub gp_max_depth: usize,
    pub seed: u64,
    pub tournament_size: usize,
    pub child_selection: ChildSelection,
}

impl RunConfig {
    pub fn new(algorithm: Algorithm, seed: u64) -> RunConfig {
        RunConfig {
            algorithm,
            min_population: 500,
            max_iterations: 100,
            limits: Limits::default(),
            budget: EvalBudget::default(),
            gp_max_depth: 2,
            seed,
            tournament_size: 4,
            child_selection: ChildSelection::default(),
        }
    }
}

/// Everything a run reports. Wall time is informational only and excluded
/// from the serialized report so reports stay byte-deterministic.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub algorithm: Algorithm,
    pub seed: u64,
    pub success: bool,
    pub iterations_used: usize,
    pub best_program: Program,
    pub best_fitness: Fraction,
    /// Best fitness after initialization (index 0) and after each iteration.
    pub trajectory: Vec<Fraction>,
    /// Population mean of each operator rate at the end (adaptive runs only).
    pub mean_rates: Option<[f64; 9]>,
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    EmptyPool,
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::EmptyPool => write!(f, "{}", EmptyPool),
        }
    }
}

impl std::error::Error for RunError {}

impl From<EmptyPool> for RunError {
    fn from(_: EmptyPool) -> Self {
        RunError::EmptyPool
    }
}

/// Memoizing fitness evaluator; covering is a pure function of the program
/// under a fixed dataset and budget.
pub struct Evaluator<'a> {
    dataset: &'a Dataset,
    budget: EvalBudget,
    cache: HashMap<Program, Fraction>,
}

impl<'a> Evaluator<'a> {
    pub fn new(dataset: &'a Dataset, budget: EvalBudget) -> Evaluator<'a> {
        Evaluator {
            dataset,
            budget,
            cache: HashMap::new(),
        }
    }

    pub fn fitness(&mut self, program: &Program) -> Fraction {
        if let Some(&f) = self.cache.get(program) {
            return f;
        }
        let f = covering_factor(program, self.dataset, self.budget);
        self.cache.insert(program.clone(), f);
        f
    }
}

/// Mixes (seed, lane, slot) into an independent derived seed.
pub fn derive_seed(seed: u64, lane: u64, slot: u64) -> u64 {
    let mut x = seed;
    x = splitmix64(x ^ lane.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    x = splitmix64(x ^ slot.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    x
}

/// Derives an independent deterministic stream per (seed, lane, slot).
fn derive_rng(seed: u64, lane: u64, slot: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, lane, slot))
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Draws `k` individuals uniformly with replacement and returns the index
/// of the fittest; ties are broken uniformly at random.
pub fn tournament_select(population: &[Individual], k: usize, rng: &mut impl Rng) -> usize {
    debug_assert!(!population.is_empty());
    let mut best = rng.random_range(0..population.len());
    let mut ties = 1u32;
    for _ in 1..k {
        let next = rng.random_range(0..population.len());
        match population[next].fitness.cmp(&population[best].fitness) {
            std::cmp::Ordering::Greater => {
                best = next;
                ties = 1;
            }
            std::cmp::Ordering::Equal => {
                ties += 1;
                if rng.random_range(0..ties) == 0 {
                    best = next;
                }
            }
            std::cmp::Ordering::Less => {}
        }
    }
    best
}

fn choose_child(
    offspring: Vec<Program>,
    policy: ChildSelection,
    evaluator: &mut Evaluator<'_>,
    rng: &mut impl Rng,
) -> (Program, Fraction) {
    match policy {
        ChildSelection::Uniform => {
            let idx = rng.random_range(0..offspring.len());
            let child = offspring.into_iter().nth(idx).expect("index in range");
            let fitness = evaluator.fitness(&child);
            (child, fitness)
        }
        ChildSelection::Best => {
            let mut best: Option<(Program, Fraction)> = None;
            for child in offspring {
                let fitness = evaluator.fitness(&child);
                match &best {
                    Some((_, f)) if *f >= fitness => {}
                    _ => best = Some((child, fitness)),
                }
            }
            best.expect("offspring is non-empty")
        }
    }
}

/// One adaptive step of a single individual against a frozen population
/// snapshot. Returns the individual advancing to the next population,
/// carrying the updated rate vector.
pub fn haea_step(
    individual: &Individual,
    population: &[Individual],
    evaluator: &mut Evaluator<'_>,
    ctx: &OpContext<'_>,
    cfg: &RunConfig,
    rng: &mut impl Rng,
) -> Individual {
    let op = individual.rates.select(rng);
    let mate_idx = if op.is_binary() {
        Some(tournament_select(population, cfg.tournament_size, rng))
    } else {
        None
    };
    let mate_program = mate_idx.map(|i| &population[i].program);
    let outcome = apply_operator(op, &individual.program, mate_program, ctx, rng);
    let (child, child_fitness) =
        choose_child(outcome.offspring, cfg.child_selection, evaluator, rng);

    let learning_rate: f64 = rng.random::<f64>();
    let mut rates = individual.rates.clone();
    let (program, fitness) = match child_fitness.cmp(&individual.fitness) {
        std::cmp::Ordering::Greater => {
            rates.reward(op, learning_rate);
            (child, child_fitness)
        }
        std::cmp::Ordering::Equal => {
            // The operator was not productive, but an equally fit child may
            // carry new material; letting it drift in keeps the population
            // able to cross fitness plateaus.
            rates.punish(op, learning_rate);
            (child, child_fitness)
        }
        std::cmp::Ordering::Less => {
            rates.punish(op, learning_rate);
            (individual.program.clone(), individual.fitness)
        }
    };
    rates.floor_and_normalize();
    Individual {
        program,
        rates,
        fitness,
    }
}

fn population_best(population: &[Individual]) -> usize {
    let mut best = 0;
    for i in 1..population.len() {
        if population[i].fitness > population[best].fitness {
            best = i;
        }
    }
    best
}

fn mean_rates(population: &[Individual]) -> [f64; 9] {
    let mut out = [0.0; 9];
    for ind in population {
        for (acc, r) in out.iter_mut().zip(ind.rates.as_array()) {
            *acc += r;
        }
    }
    for acc in out.iter_mut() {
        *acc /= population.len() as f64;
    }
    out
}

/// Runs the adaptive algorithm on a dataset.
pub fn run_haea(dataset: &Dataset, cfg: &RunConfig) -> Result<RunReport, RunError> {
    run_loop(dataset, cfg, Mode::Adaptive)
}

/// Runs the classic-GP baseline: same seeding, same replacement, but the
/// only operators are subtree crossover and mutation at equal probability.
pub fn run_gp(dataset: &Dataset, cfg: &RunConfig) -> Result<RunReport, RunError> {
    run_loop(dataset, cfg, Mode::Baseline)
}

/// Dispatches on the configured algorithm.
pub fn run(dataset: &Dataset, cfg: &RunConfig) -> Result<RunReport, RunError> {
    match cfg.algorithm {
        Algorithm::HaEa => run_haea(dataset, cfg),
        Algorithm::Gp => run_gp(dataset, cfg),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Adaptive,
    Baseline,
}

fn gp_step(
    individual: &Individual,
    population: &[Individual],
    evaluator: &mut Evaluator<'_>,
    ctx: &OpContext<'_>,
    cfg: &RunConfig,
    rng: &mut impl Rng,
) -> Individual {
    let op = if rng.random_bool(0.5) {
        OperatorId::GpXover
    } else {
        OperatorId::GpMutation
    };
    let mate_idx = if op.is_binary() {
        Some(tournament_select(population, cfg.tournament_size, rng))
    } else {
        None
    };
    let mate_program = mate_idx.map(|i| &population[i].program);
    let outcome = apply_operator(op, &individual.program, mate_program, ctx, rng);
    let (child, child_fitness) =
        choose_child(outcome.offspring, cfg.child_selection, evaluator, rng);
    if child_fitness > individual.fitness {
        Individual {
            program: child,
            rates: individual.rates.clone(),
            fitness: child_fitness,
        }
    } else {
        individual.clone()
    }
}

fn run_loop(dataset: &Dataset, cfg: &RunConfig, mode: Mode) -> Result<RunReport, RunError> {
    let started = Instant::now();
    let signature = dataset.signature();
    let ctx = OpContext {
        background: &dataset.background,
        signature: &signature,
        limits: cfg.limits,
        gp_depth: cfg.gp_max_depth,
    };
    let mut evaluator = Evaluator::new(dataset, cfg.budget);

    let mut init_rng = derive_rng(cfg.seed, 0, 0);
    let programs = generalize::initial_population(
        dataset,
        cfg.min_population,
        cfg.limits.max_equation_nodes,
        &mut init_rng,
    )?;
    let mut population: Vec<Individual> = programs
        .into_iter()
        .map(|program| {
            let fitness = evaluator.fitness(&program);
            let rates = OperatorRates::init_uniform(&mut init_rng);
            Individual {
                program,
                rates,
                fitness,
            }
        })
        .collect();

    let mut trajectory = vec![population[population_best(&population)].fitness];
    let mut iterations_used = 0;

    for iteration in 1..=cfg.max_iterations {
        if trajectory.last().unwrap().is_one() {
            break;
        }
        // Steady state: every individual is evolved in place, so a child
        // entering the population is immediately visible as a tournament
        // mate for the slots that follow it within the same iteration.
        for slot in 0..population.len() {
            let mut rng = derive_rng(cfg.seed, iteration as u64, slot as u64);
            let current = population[slot].clone();
            let next = match mode {
                Mode::Adaptive => {
                    haea_step(&current, &population, &mut evaluator, &ctx, cfg, &mut rng)
                }
                Mode::Baseline => {
                    gp_step(&current, &population, &mut evaluator, &ctx, cfg, &mut rng)
                }
            };
            population[slot] = next;
        }
        iterations_used = iteration;
        trajectory.push(population[population_best(&population)].fitness);
        if trajectory.last().unwrap().is_one() {
            break;
        }
    }

    let best_idx = population_best(&population);
    let best = &population[best_idx];
    Ok(RunReport {
        algorithm: cfg.algorithm,
        seed: cfg.seed,
        success: best.fitness.is_one(),
        iterations_used,
        best_program: best.program.clone(),
        best_fitness: best.fitness,
        trajectory,
        mean_rates: match mode {
            Mode::Adaptive => Some(mean_rates(&population)),
            Mode::Baseline => None,
        },
        wall_time: started.elapsed(),
    })
}
