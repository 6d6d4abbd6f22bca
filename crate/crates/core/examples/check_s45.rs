use unipotent::groups::PermGroup;
use unipotent::mgamma::MGamma;

fn main() {
    for (name, n, expect) in [("S4", 4usize, 21usize), ("S5", 5, 39)] {
        let t0 = std::time::Instant::now();
        let m = MGamma::new(PermGroup::symmetric(n)).unwrap();
        assert_eq!(m.len(), expect, "{name} size");
        let mat = m.pairing_matrix().unwrap();
        let mut irrational = 0;
        for i in 0..m.len() {
            for j in 0..m.len() {
                assert_eq!(mat[i][j], mat[j][i], "{name} symmetry {i},{j}");
                if mat[i][j].as_rat().is_none() { irrational += 1; }
            }
        }
        assert!(m.fourier_is_involutive().unwrap(), "{name} S^2 = I");
        let mut hom_ok = true;
        for &z in m.elems() {
            if !m.check_convolution_hom(z).unwrap() { hom_ok = false; }
        }
        println!("{name}: |M|={} irrational_entries={} S^2=I ok, hom={} ({:?})",
                 m.len(), irrational, hom_ok, t0.elapsed());
    }
}
