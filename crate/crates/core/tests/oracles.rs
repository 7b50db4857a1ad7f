//! Reference values from an independent 50-digit evaluation.

use ifjs::jsd::{l_divergence, shannon_interval_entropy, zeta};
use ifjs::{dist_wu, dist_xiao, entropy_ifv, Dataset, Ifv};

fn close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b}");
}

#[test]
fn scalar_references() {
    close(
        l_divergence(0.5, 0.25).unwrap(),
        0.061_278_124_459_132_86,
        1e-15,
    );
    close(zeta(0.25).unwrap(), 0.188_721_875_540_867_14, 1e-15);
    let a = Ifv::new(0.5, 0.25).unwrap();
    close(entropy_ifv(&a), 0.779_104_231_150_982_6, 1e-14);
    close(shannon_interval_entropy(&a), std::f64::consts::LN_2, 1e-15);
}

#[test]
fn case_distances_to_six_digits() {
    let xiao = [0.146137, 0.135307, 0.172097, 0.133520, 0.132243];
    let wu = [0.0856256, 0.0856801, 0.0746220, 0.0980203, 0.0961471];
    for k in 0..5 {
        let d = Dataset::builtin(&format!("tableI_case{}", k + 1)).unwrap();
        let (a, b) = (d.get("A").unwrap(), d.get("B").unwrap());
        close(dist_xiao(a, b).unwrap(), xiao[k], 1e-6);
        close(dist_wu(a, b, &d.weights_or_uniform()).unwrap(), wu[k], 1e-7);
    }
}

#[test]
fn printed_cases_differ_from_published() {
    for (k, published) in [(3, 0.17210), (4, 0.13352)] {
        let d = Dataset::builtin(&format!("tableI_case{k}_printed")).unwrap();
        let x = dist_xiao(d.get("A").unwrap(), d.get("B").unwrap()).unwrap();
        assert!((x - published).abs() > 0.1, "case {k}: {x}");
    }
}
