// scratch: inspect eliminant sizes in the chart used by the pipeline
use hessiankit::cubic::*;
use hessiankit::groebner::*;
use hessiankit::linalg::RatMatrix;
use hessiankit::poly::{MonomialOrder, MultiPoly, Ring};
use hessiankit::rat::{rat, Rat};
use hessiankit::rng::XorShift64Star;
use num::traits::{One, Zero};

fn main() {
    let c = cayley_cubic();
    let ideal = rank2_pencil_ideal(&c).unwrap();
    let mut rng = XorShift64Star::new(0);
    // mimic the pipeline: attempt 0 = identity fails, attempt 1 = random
    let _ = RatMatrix::identity(4);
    let change = random_invertible_matrix(&mut rng, 4, 5);
    println!("change:\n{change}");
    let moved: Vec<MultiPoly> = ideal.generators().iter().map(|g| g.linear_substitute(&change).unwrap()).collect();
    let affine: Vec<MultiPoly> = moved.iter().map(|g| g.substitute_value(3, &Rat::one(), Ring::t3())).collect();
    let aff_ideal = Ideal::new(Ring::t3(), affine);
    let t0 = std::time::Instant::now();
    let gb = buchberger(&aff_ideal, MonomialOrder::DegRevLex);
    println!("gb in {:?}, {} elements", t0.elapsed(), gb.elements().len());
    for v in 0..3 {
        let t0 = std::time::Instant::now();
        let e = eliminant(&aff_ideal, v).unwrap();
        let (prim, _) = e.primitive_integer();
        let digits: Vec<usize> = prim.coeffs().iter().map(|c| c.numer().to_string().len()).collect();
        println!("eliminant t{v}: degree {:?} in {:?}, integer coeff digit counts {:?}", e.degree(), t0.elapsed(), digits);
        let t1 = std::time::Instant::now();
        let roots = e.rational_roots().unwrap();
        println!("  roots ({:?}): {:?}", t1.elapsed(), roots.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    }
}
