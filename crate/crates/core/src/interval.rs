use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::staircase::Staircase;

/// Quotient of two monomial ideals, stored as generator and relation staircases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalModule<T> {
    dim: usize,
    generators: Staircase<T>,
    relations: Staircase<T>,
}

impl<T: Scalar> IntervalModule<T> {
    /// Builds `<gens> / <rels>`. Every relation must lie above some generator.
    /// Generators that already lie in the relation upset are zero and dropped.
    pub fn new(dim: usize, generators: Vec<Degree<T>>, relations: Vec<Degree<T>>) -> Result<Self> {
        for d in generators.iter().chain(&relations) {
            if d.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: d.dim() });
            }
        }
        let gens = Staircase::new(dim, generators)?;
        for r in &relations {
            if !gens.covers(r) {
                return Err(Error::RelationNotAboveGenerator(r.to_string()));
            }
        }
        let rels = Staircase::new(dim, relations)?;
        Ok(Self::normalized(dim, gens, rels))
    }

    fn normalized(dim: usize, gens: Staircase<T>, rels: Staircase<T>) -> Self {
        let alive: Vec<_> = gens.points().iter().filter(|g| !rels.covers(g)).cloned().collect();
        if alive.is_empty() {
            return IntervalModule { dim, generators: Staircase::empty(dim), relations: Staircase::empty(dim) };
        }
        let generators = if alive.len() == gens.len() {
            gens
        } else {
            Staircase::new(dim, alive).expect("subset of a staircase")
        };
        // relations become the minimal degrees of <gens> meet <rels>
        let relations = if rels.points().iter().all(|r| generators.covers(r)) {
            rels
        } else {
            let mut out = Vec::new();
            for r in rels.points() {
                if generators.covers(r) {
                    out.push(r.clone());
                } else {
                    out.extend(generators.points().iter().map(|g| g.join(r).expect("same dimension")));
                }
            }
            Staircase::new(dim, out).expect("same dimension")
        };
        IntervalModule { dim, generators, relations }
    }

    pub fn free(g: Degree<T>) -> Self {
        let dim = g.dim();
        IntervalModule { dim, generators: Staircase::new(dim, vec![g]).unwrap(), relations: Staircase::empty(dim) }
    }

    pub fn zero(dim: usize) -> Self {
        IntervalModule { dim, generators: Staircase::empty(dim), relations: Staircase::empty(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &Staircase<T> {
        &self.generators
    }

    pub fn relations(&self) -> &Staircase<T> {
        &self.relations
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn beta0(&self) -> usize {
        self.generators.len()
    }

    pub(crate) fn contains_unchecked(&self, d: &Degree<T>) -> bool {
        self.generators.covers(d) && !self.relations.covers(d)
    }

    pub fn support_contains(&self, d: &Degree<T>) -> Result<bool> {
        if d.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: d.dim() });
        }
        Ok(self.contains_unchecked(d))
    }

    /// Whether `v * g` is nonzero for the generator at degree `g`.
    pub fn shift_is_nonzero(&self, g: &Degree<T>, v: &Degree<T>) -> Result<bool> {
        if g.dim() != self.dim || v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim().min(g.dim()) });
        }
        if !self.generators.contains_point(g) {
            return Err(Error::NotAGenerator(g.to_string()));
        }
        Ok(self.contains_unchecked(&g.add(v)))
    }

    /// Quotient by everything at or above `alpha`.
    pub fn truncate(&self, alpha: &Degree<T>) -> Result<Self> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: alpha.dim() });
        }
        let rels = self.relations.union(&Staircase::new(self.dim, vec![alpha.clone()])?)?;
        Ok(Self::normalized(self.dim, self.generators.clone(), rels))
    }

    /// Opposite order in dimension 2: both coordinates swapped.
    pub fn swapped(&self) -> Self {
        IntervalModule { dim: self.dim, generators: self.generators.swapped(), relations: self.relations.swapped() }
    }
}

/// Finite direct sum of interval modules of one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectSum<T> {
    dim: usize,
    summands: Vec<IntervalModule<T>>,
}

impl<T: Scalar> DirectSum<T> {
    pub fn new(summands: Vec<IntervalModule<T>>) -> Result<Self> {
        let dim = summands.first().map_or(2, |m| m.dim());
        if let Some(m) = summands.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: m.dim() });
        }
        Ok(DirectSum { dim, summands })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn summands(&self) -> &[IntervalModule<T>] {
        &self.summands
    }

    pub fn beta0(&self) -> usize {
        self.summands.iter().map(|m| m.beta0()).sum()
    }
}
