// scratch: exercise intersection_analysis on corpus cubics
use hessiankit::cubic::*;
use hessiankit::rat::rat;

fn main() {
    for (name, cubic) in [
        ("cayley", cayley_cubic()),
        ("fermat", fermat_cubic()),
        ("pentahedral(1,2,3,4,5)", make_normal_form(&NormalFormParams::Pentahedral([rat(1),rat(2),rat(3),rat(4),rat(5)])).unwrap()),
        ("rank6(1,1,1)", make_normal_form(&NormalFormParams::Rank6([rat(1),rat(1),rat(1)])).unwrap()),
        ("rank6(1,2,3)", make_normal_form(&NormalFormParams::Rank6([rat(1),rat(2),rat(3)])).unwrap()),
        ("altrank6(1,1,1)", make_normal_form(&NormalFormParams::AltRank6([rat(1),rat(1),rat(1)])).unwrap()),
        ("singular(2,3,4)", make_normal_form(&NormalFormParams::SingularGeneric([rat(2),rat(3),rat(4)])).unwrap()),
    ] {
        let t0 = std::time::Instant::now();
        match intersection_analysis(&cubic, &AnalysisOptions::seeded(0)) {
            Ok(r) => println!(
                "{name}: class={} degree={:?} profile={} radical={:?} on_hd={} cc_retries={} sep_retries={} [{:?}]",
                r.dimension_class,
                r.degree,
                r.profile.map(|p| p.to_string()).unwrap_or("-".into()),
                r.radical,
                r.on_hessian_discriminant,
                r.seeds.coordinate_retries,
                r.seeds.separation_retries,
                t0.elapsed()
            ),
            Err(e) => println!("{name}: ERROR {e} [{:?}]", t0.elapsed()),
        }
    }
}
