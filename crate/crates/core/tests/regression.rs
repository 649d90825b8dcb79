mod common;

use common::pp;
use condinf::study::{prob_trace_half_above, releff_histogram};
use condinf::{DesignSpec, Rule};

/// Mass of half the relative-efficiency trace above one for RPW(1,1) at
/// p = (0.9, 0.9), frozen from the first exact run.
#[test]
fn relative_efficiency_mass_above_one_is_stable() {
    let rpw = Rule::Rpw { alpha: 1, beta: 1 };
    for (n, frozen) in [(25, 1.0), (50, 0.6406), (100, 0.0976)] {
        let bins = releff_histogram(&DesignSpec::new(rpw, n).unwrap(), &pp(0.9, 0.9)).unwrap();
        let total: f64 = bins.iter().map(|b| b.probability).sum();
        assert!((total - 1.0).abs() < 1e-12);
        let mass = prob_trace_half_above(&bins, 1.0);
        assert!((mass - frozen).abs() < 5e-5, "n={n}: {mass}");
    }
}

#[test]
fn histogram_is_symmetric_at_equal_probabilities() {
    let design = DesignSpec::new(Rule::Sdd { alpha: 1, beta: 1 }, 30).unwrap();
    let bins = releff_histogram(&design, &pp(0.7, 0.7)).unwrap();
    for (a, b) in bins.iter().zip(bins.iter().rev()) {
        assert!((a.probability - b.probability).abs() < 1e-13);
        assert!((a.trace_half - b.trace_half).abs() < 1e-9);
    }
}
