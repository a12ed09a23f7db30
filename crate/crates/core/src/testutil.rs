use crate::io::parse_problem;
use crate::model::Problem;

pub fn reference_document() -> &'static str {
    include_str!("../data/reference_example.json")
}

pub fn reference_problem() -> Problem {
    parse_problem(reference_document()).unwrap()
}

pub fn assert_close(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len());
    for (j, (g, w)) in got.iter().zip(want).enumerate() {
        assert!(
            (g - w).abs() <= tol,
            "component {j}: got {g}, want {w} (got {got:?})"
        );
    }
}
