use super::laurent::LaurentPoly;
use super::seed::{ExchangeRelation, Seed};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

pub const DEFAULT_BUDGET: usize = 100_000;

/// Breadth-first closure of a seed under mutation, on unlabeled seeds.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub seeds: Vec<Seed>,
    /// `(from, vertex, to)` for every mutation, including both directions.
    pub edges: Vec<(usize, usize, usize)>,
    /// The exchange relation for each entry of `edges`.
    pub relations: Vec<ExchangeRelation>,
    pub variables: BTreeSet<LaurentPoly>,
}

impl ExchangeGraph {
    pub fn seed_count(&self) -> usize {
        self.seeds.len()
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// Denominator vectors of all cluster variables, sorted.
    pub fn d_vectors(&self) -> Vec<Vec<i64>> {
        let mut d: Vec<Vec<i64>> = self.variables.iter().map(|v| v.d_vector()).collect();
        d.sort();
        d
    }

    /// One relation per undirected edge.
    pub fn distinct_relations(&self) -> Vec<&ExchangeRelation> {
        self.edges
            .iter()
            .zip(&self.relations)
            .filter(|((a, _, b), _)| a < b)
            .map(|(_, r)| r)
            .collect()
    }
}

/// Explores all seeds reachable from `initial`. Fails with
/// [`Error::BudgetExceeded`] beyond `budget` seeds.
pub fn exchange_graph(initial: &Seed, budget: usize) -> Result<ExchangeGraph> {
    let mut index: HashMap<Vec<LaurentPoly>, usize> = HashMap::new();
    let mut seeds = vec![initial.clone()];
    index.insert(initial.key(), 0);
    let mut variables: BTreeSet<LaurentPoly> = initial.cluster().iter().cloned().collect();
    let mut edges = Vec::new();
    let mut relations = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        for k in 0..seeds[s].rank() {
            let (t, rel) = seeds[s].mutate(k)?;
            let mutable = t.ice().mutable_part();
            if (0..mutable.n()).any(|i| mutable.entry(i, i) != 0) {
                return Err(Error::Internal("mutation produced a loop".into()));
            }
            let key = t.key();
            let target = match index.get(&key) {
                Some(&id) => id,
                None => {
                    if seeds.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    variables.insert(t.cluster()[k].clone());
                    seeds.push(t);
                    index.insert(key, seeds.len() - 1);
                    queue.push_back(seeds.len() - 1);
                    seeds.len() - 1
                }
            };
            edges.push((s, k, target));
            relations.push(rel);
        }
    }
    Ok(ExchangeGraph { seeds, edges, relations, variables })
}
