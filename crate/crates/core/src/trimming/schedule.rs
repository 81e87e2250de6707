//! Facet elimination: place, drop the facet's inequality, repeat until the
//! polyhedron is degenerate or trivial.

use super::placement::{common_trimming_facet, place_first, place_second};
use super::TrimmingCertificate;
use crate::error::{Error, Result};
use crate::exactgeom::{HalfSpace, Vector};
use crate::polyhedron::Polyhedron;

#[derive(Clone, Debug)]
pub struct Stage {
    pub polyhedron: Polyhedron,
    pub facet_index: usize,
    pub first: TrimmingCertificate,
    pub second: TrimmingCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Terminal {
    /// `R^3` itself, or a single half-space.
    Trivial { facets: usize },
    /// Bounded input; nothing to eliminate.
    Bounded,
    /// A pointed factor times the lineality space.
    DegenerateProduct { factor: Polyhedron, lineality: Vec<Vector> },
}

#[derive(Clone, Debug)]
pub struct Schedule {
    pub stages: Vec<Stage>,
    pub last: Polyhedron,
    pub terminal: Terminal,
}

fn drop_facet(k: &Polyhedron, i: usize) -> Result<Polyhedron> {
    let rest: Vec<HalfSpace> = k.facets().iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
    Polyhedron::from_halfspaces(k.ambient_dim(), &rest)
}

fn terminal_of(k: &Polyhedron) -> Result<Option<Terminal>> {
    if k.facets().len() <= 1 {
        return Ok(Some(Terminal::Trivial { facets: k.facets().len() }));
    }
    if k.is_degenerate() {
        let (factor, lineality) = k.split_lineality()?;
        return Ok(Some(Terminal::DegenerateProduct { factor, lineality }));
    }
    if k.is_bounded() {
        return Ok(Some(Terminal::Bounded));
    }
    Ok(None)
}

pub fn schedule(k: &Polyhedron) -> Result<Schedule> {
    if k.ambient_dim() != 3 {
        return Err(Error::pre("schedules are built in R^3 only"));
    }
    if k.is_empty() {
        return Err(Error::EmptyPolyhedron);
    }
    if !k.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if k.is_layer() {
        return Err(Error::pre("a layer disconnects the space"));
    }
    let mut stages = Vec::new();
    let mut cur = k.clone();
    loop {
        if let Some(terminal) = terminal_of(&cur)? {
            return Ok(Schedule { stages, last: cur, terminal });
        }
        let i = common_trimming_facet(&cur)?;
        let first = place_first(&cur, Some(i))?;
        let second = place_second(&cur, Some(i))?;
        let next = drop_facet(&cur, i)?;
        stages.push(Stage { polyhedron: cur, facet_index: i, first, second });
        cur = next;
    }
}

impl Schedule {
    /// Re-verifies every stage from its stored snapshot.
    pub fn verify(&self) -> Result<bool> {
        for (s, stage) in self.stages.iter().enumerate() {
            let k = &stage.polyhedron;
            if !stage.first.verify(k)? || !stage.second.verify(k)? {
                return Ok(false);
            }
            if stage.first.facet_index != stage.facet_index || stage.second.facet_index != stage.facet_index {
                return Ok(false);
            }
            let next = self.stages.get(s + 1).map(|t| &t.polyhedron).unwrap_or(&self.last);
            if next.facets().len() + 1 != k.facets().len() || *next != drop_facet(k, stage.facet_index)? {
                return Ok(false);
            }
        }
        Ok(terminal_of(&self.last)?.as_ref() == Some(&self.terminal))
    }
}
