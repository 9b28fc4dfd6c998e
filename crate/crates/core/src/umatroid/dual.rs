use std::sync::Arc;

use super::rank::{RankFunction, UMatroid};
use crate::lattice::Subset;

/// `ρ*(Z) = ρ(E ∖ Z) + |Z| − ρ(E)` on the dual lattice.
pub fn dual(u: &UMatroid) -> UMatroid {
    let n = u.n();
    let total = u.total();
    let d = Arc::new(u.lattice().dual());
    let rank = RankFunction::from_fn(d, |z: Subset| {
        u.rank(z.complement(n)) + z.len() as i64 - total
    })
    .expect("dual ranks are non-negative");
    UMatroid::trusted(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{DistLattice, Poset};
    use crate::umatroid::bases;

    #[test]
    fn stalactite_dual() {
        let d = DistLattice::order_ideals(&Poset::from_relations(4, &[(1, 4)]).unwrap()).unwrap();
        let u = UMatroid::from_fn(Arc::new(d), |s| s.len().min(2) as i64).unwrap();
        let du = dual(&u);
        assert_eq!(du.rank(Subset::EMPTY), 0);
        assert!(du.lattice().irr_poset().lt(4, 1));
        let mut want: Vec<Subset> = [[3, 4], [2, 4], [2, 3], [1, 4]]
            .iter()
            .map(|s| Subset::from_elements(s.iter().copied()))
            .collect();
        want.sort();
        assert_eq!(bases(&du).unwrap(), want);
        assert_eq!(dual(&du), u);
    }
}
