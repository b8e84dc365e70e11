use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty group table")]
    Empty,
    #[error("table row {row} has length {len}, expected {order}")]
    Ragged { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity index {0} is out of range")]
    BadIdentityIndex(usize),
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation")]
    ColumnNotPermutation(usize),
    #[error("element {identity} does not act as identity on {element}")]
    NotIdentity { identity: usize, element: usize },
    #[error("table is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

/// A finite group given by its Cayley table: `cayley[g][h]` is the index of `gh`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    cayley: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates the table: Latin square, two-sided identity, associativity.
    /// Inverses exist because every row is a permutation.
    pub fn new(cayley: Vec<Vec<usize>>, identity: usize) -> Result<Self, GroupError> {
        let order = cayley.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if identity >= order {
            return Err(GroupError::BadIdentityIndex(identity));
        }
        for (row, r) in cayley.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::Ragged {
                    row,
                    len: r.len(),
                    order,
                });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= order) {
                return Err(GroupError::OutOfRange { row, col, value, order });
            }
        }
        for g in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for h in 0..order {
                if std::mem::replace(&mut seen_row[cayley[g][h]], true) {
                    return Err(GroupError::RowNotPermutation(g));
                }
                if std::mem::replace(&mut seen_col[cayley[h][g]], true) {
                    return Err(GroupError::ColumnNotPermutation(g));
                }
            }
        }
        if let Some(g) = (0..order).find(|&g| cayley[identity][g] != g || cayley[g][identity] != g) {
            return Err(GroupError::NotIdentity { identity, element: g });
        }
        for a in 0..order {
            for b in 0..order {
                let ab = cayley[a][b];
                for c in 0..order {
                    if cayley[ab][c] != cayley[a][cayley[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { cayley, identity })
    }

    /// Cyclic group `C_n`, element `k` standing for `r^k`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(table, 0)
    }

    /// Dihedral group of order `2n`; index `k + n·e` stands for `r^k s^e`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        let order = 2 * n;
        let decode = |g: usize| (g % n, g / n);
        let table = (0..order)
            .map(|a| {
                (0..order)
                    .map(|b| {
                        let (k1, e1) = decode(a);
                        let (k2, e2) = decode(b);
                        // r^k1 s^e1 r^k2 s^e2 = r^(k1 ± k2) s^(e1+e2), since s r = r^-1 s.
                        let k = if e1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                        k + n * ((e1 + e2) % 2)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(table, 0)
    }

    /// Symmetric group on `n` points. Permutations are listed in
    /// lexicographic order of their one-line notation, so index 0 is the
    /// identity; `(gh)(x) = g(h(x))`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let perms = permutations(n);
        let index_of = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| index_of(&h.iter().map(|&x| g[x]).collect()))
                    .collect()
            })
            .collect();
        FiniteGroup::new(table, 0)
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.cayley[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.cayley[g]
            .iter()
            .position(|&x| x == self.identity)
            .expect("rows are permutations")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Partition into conjugacy classes, each sorted, classes ordered by
    /// their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|h| self.mul(self.mul(h, g), self.inverse(h))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                assigned[c] = true;
            }
            classes.push(class);
        }
        classes
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
