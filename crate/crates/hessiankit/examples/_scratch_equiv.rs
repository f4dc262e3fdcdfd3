// scratch: GL-equivariance + pluecker relation sign check
use hessiankit::cubic::*;
use hessiankit::invariants::random_pentahedron;
use hessiankit::linalg::RatMatrix;
use hessiankit::rat::{rat, Rat};
use hessiankit::rng::XorShift64Star;
use num::traits::Zero;
use std::collections::HashMap;

fn main() {
    // pluecker 3-term relation on a random 4x10 matrix (sign sanity)
    let mut rng = XorShift64Star::new(5);
    let m = RatMatrix::from_fn(4, 10, |_, _| rat(rng.int_in(-4, 4)));
    let subsets = pluecker_column_subsets();
    let idx: HashMap<[usize; 4], usize> = subsets.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let p: Vec<Rat> = subsets.iter().map(|s| m.minor(&[0,1,2,3], s).unwrap()).collect();
    let i = [0usize, 1, 2];
    let j = [3usize, 4, 5, 6, 7];
    let mut acc = Rat::zero();
    for (s, &js) in j.iter().enumerate() {
        let mut a = [i[0], i[1], i[2], js];
        a.sort();
        let rest: Vec<usize> = j.iter().copied().filter(|&x| x != js).collect();
        let b = [rest[0], rest[1], rest[2], rest[3]];
        let term = &p[idx[&a]] * &p[idx[&b]];
        if s % 2 == 0 { acc += term } else { acc -= term }
    }
    println!("pluecker 3-term relation residue: {} (zero: {})", acc, acc.is_zero());

    // GL-equivariance of the full verdict
    let mut rng = XorShift64Star::new(11);
    let pent = random_pentahedron(&mut rng);
    let cubics = vec![
        ("pent-random", pent.to_cubic().unwrap()),
        ("rank6(2,-1,3)", make_normal_form(&NormalFormParams::Rank6([rat(2), rat(-1), rat(3)])).unwrap()),
        ("cayley", cayley_cubic()),
    ];
    for (name, f) in cubics {
        let base = intersection_analysis(&f, &AnalysisOptions::seeded(1)).unwrap();
        for k in 0..3 {
            let m = random_invertible_matrix(&mut rng, 4, 3);
            let g = f.linear_substitute(&m).unwrap();
            let t0 = std::time::Instant::now();
            let r = intersection_analysis(&g, &AnalysisOptions::seeded(1)).unwrap();
            let agree = r.dimension_class == base.dimension_class
                && r.degree == base.degree
                && r.profile == base.profile
                && r.radical == base.radical
                && r.on_hessian_discriminant == base.on_hessian_discriminant;
            println!("{name} change {k}: agree={agree} [{:?}]", t0.elapsed());
        }
    }
}
