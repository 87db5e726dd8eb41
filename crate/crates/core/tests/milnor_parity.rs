//! For three-component links whose invariants of length < 6 vanish, the
//! realisable values of mu(123123) form the lattice 2Z while mu(112323)
//! reaches every integer. Claspers with leaves 1,1,2,2,3,3 on the unlink
//! produce exactly such links.

use num_integer::Integer;
use num_traits::Zero;

use linkinv::catalog::catalog;
use linkinv::constructions::{random_clasper_on, trial_rng, DEFAULT_CROSSING_BUDGET};
use linkinv::magnus::{MilnorIndex, MilnorInvariants};

#[test]
fn mu_123123_is_even_when_lower_invariants_vanish() {
    let unlink = catalog("unlink-3").unwrap();
    let xyzxyz = MilnorIndex::parse("123123").unwrap();
    let xxyzyz = MilnorIndex::parse("112323").unwrap();
    let mut odd_seen = false;
    let mut nonzero_seen = false;
    for t in 0..40 {
        let mut rng = trial_rng(31, t);
        let mv = random_clasper_on(&unlink, &[0, 0, 1, 1, 2, 2], &mut rng, DEFAULT_CROSSING_BUDGET).unwrap();
        let m = MilnorInvariants::for_diagram(&mv.result, 6).unwrap();
        for i in MilnorIndex::all(3, 5) {
            assert!(m.mu(&i).unwrap().is_zero(), "trial {t}: mu({i}) nonzero");
        }
        let v = m.mu_bar(&xyzxyz).unwrap();
        assert!(v.delta.is_zero());
        assert!(v.value.is_even(), "trial {t}: mu(123123) = {}", v.value);
        nonzero_seen |= !v.value.is_zero();
        odd_seen |= m.mu(&xxyzyz).unwrap().is_odd();
    }
    assert!(nonzero_seen);
    assert!(odd_seen);
}
