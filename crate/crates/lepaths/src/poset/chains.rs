use super::Poset;
use crate::error::{Error, Result};

/// Which chain of a [`ChainPartition`] an element belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chain {
    /// `C1 = {alpha_1 < ... < alpha_a}`; its elements move East in the path picture.
    First,
    /// `C2 = {beta_1 < ... < beta_b}`; its elements move North.
    Second,
}

impl Chain {
    pub fn other(self) -> Chain {
        match self {
            Chain::First => Chain::Second,
            Chain::Second => Chain::First,
        }
    }
}

/// A partition of a width-two poset into two chains `C1`, `C2`, each listed
/// bottom to top.  Chain positions are 1-based (`alpha_1` is `c1()[0]`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainPartition {
    c1: Vec<usize>,
    c2: Vec<usize>,
    place: Vec<(Chain, usize)>,
}

impl ChainPartition {
    /// Validates that `c1`, `c2` are increasing chains covering `p` disjointly.
    pub fn new(p: &Poset, c1: Vec<usize>, c2: Vec<usize>) -> Result<ChainPartition> {
        let n = p.len();
        let mut place = vec![None; n];
        for (chain, elems) in [(Chain::First, &c1), (Chain::Second, &c2)] {
            for (i, &u) in elems.iter().enumerate() {
                if u >= n {
                    return Err(Error::ElementOutOfRange { id: u, n });
                }
                if place[u].replace((chain, i + 1)).is_some() {
                    return Err(Error::InvalidChainPartition(format!(
                        "element {u} listed twice"
                    )));
                }
            }
            for w in elems.windows(2) {
                if !p.lt(w[0], w[1]) {
                    return Err(Error::InvalidChainPartition(format!(
                        "{} is not below {} in the poset",
                        w[0], w[1]
                    )));
                }
            }
        }
        let place: Option<Vec<_>> = place.into_iter().collect();
        let place = place.ok_or_else(|| {
            Error::InvalidChainPartition("the chains do not cover every element".into())
        })?;
        Ok(ChainPartition { c1, c2, place })
    }

    pub fn c1(&self) -> &[usize] {
        &self.c1
    }

    pub fn c2(&self) -> &[usize] {
        &self.c2
    }

    /// `|C1|`.
    pub fn a(&self) -> usize {
        self.c1.len()
    }

    /// `|C2|`.
    pub fn b(&self) -> usize {
        self.c2.len()
    }

    pub fn chain(&self, which: Chain) -> &[usize] {
        match which {
            Chain::First => &self.c1,
            Chain::Second => &self.c2,
        }
    }

    /// `alpha_i` for `1 <= i <= a`.
    pub fn alpha(&self, i: usize) -> usize {
        self.c1[i - 1]
    }

    /// `beta_j` for `1 <= j <= b`.
    pub fn beta(&self, j: usize) -> usize {
        self.c2[j - 1]
    }

    /// Chain and 1-based position of `u`.
    pub fn position(&self, u: usize) -> (Chain, usize) {
        self.place[u]
    }

    pub fn chain_of(&self, u: usize) -> Chain {
        self.place[u].0
    }

    pub fn same_chain(&self, x: usize, y: usize) -> bool {
        self.chain_of(x) == self.chain_of(y)
    }

    /// The same partition with the roles of the chains exchanged.
    pub fn swapped(&self) -> ChainPartition {
        ChainPartition {
            c1: self.c2.clone(),
            c2: self.c1.clone(),
            place: self.place.iter().map(|&(c, i)| (c.other(), i)).collect(),
        }
    }
}

/// Covers a width-two poset by two chains.
///
/// Computes a minimum chain cover as a minimum path cover of the comparability
/// DAG (maximum bipartite matching, augmenting paths tried in ascending id
/// order), so the result is deterministic.  `c1` is the chain whose bottom
/// element has the smaller id; width-one posets get an empty `c2`.
pub fn width2_partition(p: &Poset) -> Result<ChainPartition> {
    let n = p.len();
    let mut succ_of: Vec<Option<usize>> = vec![None; n];
    let mut pred_of: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut visited = 0u64;
        augment(p, u, &mut visited, &mut succ_of, &mut pred_of);
    }
    let mut chains: Vec<Vec<usize>> = (0..n)
        .filter(|&u| pred_of[u].is_none())
        .map(|start| {
            let mut chain = vec![start];
            while let Some(next) = succ_of[*chain.last().unwrap()] {
                chain.push(next);
            }
            chain
        })
        .collect();
    if chains.len() > 2 {
        return Err(Error::WidthExceeded);
    }
    chains.sort_by_key(|c| c[0]);
    let mut it = chains.into_iter();
    let c1 = it.next().unwrap_or_default();
    let c2 = it.next().unwrap_or_default();
    ChainPartition::new(p, c1, c2)
}

fn augment(
    p: &Poset,
    u: usize,
    visited: &mut u64,
    succ_of: &mut [Option<usize>],
    pred_of: &mut [Option<usize>],
) -> bool {
    for v in super::bits(p.above_mask(u)) {
        if *visited >> v & 1 == 1 {
            continue;
        }
        *visited |= 1 << v;
        let free = match pred_of[v] {
            None => true,
            Some(w) => augment(p, w, visited, succ_of, pred_of),
        };
        if free {
            succ_of[u] = Some(v);
            pred_of[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_one_chain() {
        let cp = width2_partition(&Poset::chain(4)).unwrap();
        assert_eq!(cp.c1(), &[0, 1, 2, 3]);
        assert!(cp.c2().is_empty());
    }

    #[test]
    fn antichain_of_three_is_rejected() {
        assert_eq!(
            width2_partition(&Poset::antichain(3)),
            Err(Error::WidthExceeded)
        );
    }

    #[test]
    fn disjoint_chains_are_recovered() {
        let p = Poset::from_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let cp = width2_partition(&p).unwrap();
        assert_eq!((cp.c1(), cp.c2()), (&[0, 1, 2][..], &[3, 4, 5][..]));
        assert_eq!(cp.position(4), (Chain::Second, 2));
        assert_eq!(cp.swapped().position(4), (Chain::First, 2));
    }

    #[test]
    fn partition_validation() {
        let p = Poset::from_relations(3, &[(0, 1)]).unwrap();
        assert!(ChainPartition::new(&p, vec![1, 0], vec![2]).is_err());
        assert!(ChainPartition::new(&p, vec![0, 1], vec![]).is_err());
        assert!(ChainPartition::new(&p, vec![0, 1], vec![2, 2]).is_err());
        assert!(ChainPartition::new(&p, vec![0, 1], vec![2]).is_ok());
    }

    #[test]
    fn width_two_detected_on_all_small_posets() {
        for n in 0..=6 {
            for p in super::super::unlabeled_posets(n) {
                let brute_width = (0u64..1 << n)
                    .filter(|&s| {
                        super::super::bits(s).all(|u| super::super::bits(s).all(|v| !p.lt(u, v)))
                    })
                    .map(|s| s.count_ones())
                    .max()
                    .unwrap();
                match width2_partition(&p) {
                    Ok(cp) => {
                        assert!(brute_width <= 2);
                        assert_eq!(cp.a() + cp.b(), n);
                    }
                    Err(_) => assert!(brute_width > 2),
                }
            }
        }
    }
}
