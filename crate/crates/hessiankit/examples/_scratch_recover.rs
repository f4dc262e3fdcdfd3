// scratch: pentahedron recovery + theorem sampling
use hessiankit::cubic::*;
use hessiankit::invariants::*;
use hessiankit::rat::rat;
use hessiankit::rng::XorShift64Star;

fn main() {
    // round-trip on the standard frame
    let f = make_normal_form(&NormalFormParams::Pentahedral([rat(1),rat(2),rat(3),rat(4),rat(5)])).unwrap();
    let t0 = std::time::Instant::now();
    match recover_pentahedron(&f, 0) {
        Ok(p) => {
            println!("pentahedral(1,2,3,4,5) recovered in {:?}:", t0.elapsed());
            for (pl, c) in p.planes.iter().zip(&p.coefficients) {
                println!("  plane {:?} coeff {}", pl.iter().map(|v| v.to_string()).collect::<Vec<_>>(), c);
            }
            println!("  reproduces f: {}", p.to_cubic().unwrap() == f);
        }
        Err(e) => println!("pentahedral FAILED: {e}"),
    }

    // random-plane round trip
    let mut rng = XorShift64Star::new(7);
    let pent = random_pentahedron(&mut rng);
    let f2 = pent.to_cubic().unwrap();
    let t0 = std::time::Instant::now();
    match recover_pentahedron(&f2, 3) {
        Ok(p) => {
            println!("random pentahedron recovered in {:?}; reproduces: {}", t0.elapsed(), p.to_cubic().unwrap() == f2);
            let a = salmon_from_pentahedral(&pent.coefficients).unwrap();
            let b = salmon_from_pentahedral(&p.coefficients).unwrap();
            println!("  wp_equal(original c, recovered c): {}", wp_equal(&a, &b));
        }
        Err(e) => println!("random pentahedron FAILED: {e}"),
    }

    // cayley fixture
    let t0 = std::time::Instant::now();
    match recover_pentahedron(&cayley_cubic(), 0) {
        Ok(p) => println!("cayley: recovered pentahedron?! planes {:?} coeffs {:?} reproduces {}",
            p.planes.iter().map(|pl| pl.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            p.coefficients.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            p.to_cubic().unwrap() == cayley_cubic()),
        Err(e) => println!("cayley: error: {e} [{:?}]", t0.elapsed()),
    }

    // theorem sampling, small
    let t0 = std::time::Instant::now();
    let report = verify_theorem(42, 2, 2);
    println!("verify_theorem(42, 2, 2): consistent={} in {:?}", report.consistent, t0.elapsed());
    for c in &report.cases {
        println!("  {} i40_zero={} on_hd={} profile={:?} consistent={} {}", c.family, c.i40_zero, c.on_hd, c.profile, c.consistent, c.note);
    }
}
