use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A partition of `1..=n` into color classes, in canonical form: each
/// class sorted ascending, classes sorted by their maxima.
///
/// The maxima `m_1 < ⋯ < m_l` drive the ν-basis construction; `m_l = n`
/// always holds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct ColorPartition {
    classes: Vec<Vec<usize>>,
}

impl ColorPartition {
    pub fn new(classes: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut classes: Vec<Vec<usize>> = classes
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        if classes.iter().any(|c| c.is_empty()) {
            return Err(GraphError::BadPartition("empty color class".into()));
        }
        classes.sort_by_key(|c| *c.last().unwrap());
        let n: usize = classes.iter().map(|c| c.len()).sum();
        let mut seen = vec![false; n + 1];
        for &v in classes.iter().flatten() {
            if v == 0 || v > n {
                return Err(GraphError::BadPartition(format!("vertex {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::BadPartition(format!("vertex {v} appears twice")));
            }
        }
        Ok(ColorPartition { classes })
    }

    /// Groups vertices by label; `labels[v - 1]` is the color of vertex `v`.
    pub fn from_coloring<L: PartialEq>(labels: &[L]) -> Self {
        let mut classes: Vec<(&L, Vec<usize>)> = Vec::new();
        for (idx, label) in labels.iter().enumerate() {
            match classes.iter_mut().find(|(l, _)| *l == label) {
                Some((_, c)) => c.push(idx + 1),
                None => classes.push((label, vec![idx + 1])),
            }
        }
        ColorPartition::new(classes.into_iter().map(|(_, c)| c).collect()).expect("labels cover 1..=n")
    }

    pub fn n(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    /// Number of classes `l`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `m_1 < m_2 < ⋯ < m_l`.
    pub fn maxima(&self) -> Vec<usize> {
        self.classes.iter().map(|c| *c.last().unwrap()).collect()
    }

    /// Index (0-based, in maxima order) of the class containing `v`.
    pub fn class_index(&self, v: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&v).is_ok())
    }

    /// Largest vertex in the class of `v`.
    pub fn class_max(&self, v: usize) -> Option<usize> {
        self.class_index(v).map(|i| *self.classes[i].last().unwrap())
    }

    /// No edge of `g` joins two vertices of the same class.
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.n() == g.n() && g.edges().all(|(i, j)| self.class_index(i) != self.class_index(j))
    }
}

impl fmt::Display for ColorPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, v) in class.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ColorPartition {
    type Err = GraphError;

    /// Parses `1,5,8,10;2,6,9,11;3,4,7,12`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let classes = s
            .trim()
            .split(';')
            .map(|class| {
                class
                    .split(',')
                    .map(|v| {
                        v.trim()
                            .parse::<usize>()
                            .map_err(|_| GraphError::BadPartition(format!("bad vertex `{}`", v.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        ColorPartition::new(classes)
    }
}

impl TryFrom<Vec<Vec<usize>>> for ColorPartition {
    type Error = GraphError;

    fn try_from(classes: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        ColorPartition::new(classes)
    }
}

impl From<ColorPartition> for Vec<Vec<usize>> {
    fn from(p: ColorPartition) -> Self {
        p.classes
    }
}
