use crate::error::{Error, Result};
use crate::matrices::PolyMatrix;

/// A module given as free generators modulo the column span of a relation
/// matrix. Row `i` of `relations` belongs to `generators[i]`, column `j` is
/// the relation described by `relation_labels[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation<G> {
    generators: Vec<G>,
    relation_labels: Vec<String>,
    relations: PolyMatrix,
}

impl<G> Presentation<G> {
    pub fn new(generators: Vec<G>, relation_labels: Vec<String>, relations: PolyMatrix) -> Result<Self> {
        if generators.len() != relations.rows() || relation_labels.len() != relations.cols() {
            return Err(Error::Dimension(format!(
                "{} generators and {} relations for a {}x{} matrix",
                generators.len(),
                relation_labels.len(),
                relations.rows(),
                relations.cols()
            )));
        }
        Ok(Presentation {
            generators,
            relation_labels,
            relations,
        })
    }

    pub fn generators(&self) -> &[G] {
        &self.generators
    }

    pub fn relation_labels(&self) -> &[String] {
        &self.relation_labels
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    /// Drops the listed generators (0-based) together with their rows.
    pub fn delete_generators(&self, drop: &[usize]) -> Presentation<G>
    where
        G: Clone,
    {
        Presentation {
            generators: self
                .generators
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, g)| g.clone())
                .collect(),
            relation_labels: self.relation_labels.clone(),
            relations: self.relations.delete_rows(drop),
        }
    }
}
