// scratch: rational point extraction
use hessiankit::cubic::*;
use hessiankit::rat::rat;

fn main() {
    for (name, cubic) in [
        ("cayley", cayley_cubic()),
        ("pentahedral(1,2,3,4,5)", make_normal_form(&NormalFormParams::Pentahedral([rat(1),rat(2),rat(3),rat(4),rat(5)])).unwrap()),
        ("rank6(1,2,3)", make_normal_form(&NormalFormParams::Rank6([rat(1),rat(2),rat(3)])).unwrap()),
        ("singular(2,3,4)", make_normal_form(&NormalFormParams::SingularGeneric([rat(2),rat(3),rat(4)])).unwrap()),
    ] {
        let t0 = std::time::Instant::now();
        match rational_points(&cubic, 0) {
            Ok(pts) => {
                println!("{name}: {} rational points [{:?}]", pts.len(), t0.elapsed());
                for p in &pts {
                    let flat: Vec<String> = (0..4).flat_map(|i| (i..4).map(move |j| (i,j))).map(|(i,j)| p.get(i,j).to_string()).collect();
                    println!("   [{}]", flat.join(", "));
                }
            }
            Err(e) => println!("{name}: {e} [{:?}]", t0.elapsed()),
        }
    }
}
