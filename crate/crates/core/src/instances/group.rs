//! Finite groups given as explicit multiplication tables; element 0 is the
//! identity.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn new(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup("table is not square over 0..n".into()));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::InvalidGroup("element 0 is not an identity".into()));
            }
            if !table[a].contains(&0) {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, table })
    }

    /// The cyclic group Z_m.
    pub fn cyclic(m: usize) -> Self {
        let table = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        FiniteGroup::new(format!("Z{m}"), table).expect("cyclic tables are groups")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == 0)
            .expect("validated group has inverses")
    }
}
