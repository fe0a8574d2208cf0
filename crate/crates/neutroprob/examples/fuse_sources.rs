//! Fusing two subjective reports about the same object: proportional
//! conflict redistribution, distribution schemes, and t-norm combination.

use neutroprob::fixtures;
use neutroprob::fusion::{
    combine_scheme, normalize, pcr5, tnorm_fuse, CombineScheme, FusionMode, TNormConfig,
};

fn main() -> neutroprob::Result<()> {
    let (obs1, obs2) = fixtures::satellite_pair();
    println!("satellite rated (0.6, 0.1, 0.3) and (0.2, 0.3, 0.5):");
    let fused = pcr5(&obs1, &obs2);
    println!(
        "  PCR5 fusion = ({:.5}, {:.5}, {:.5})",
        fused.t.to_f64(),
        fused.i.to_f64(),
        fused.f.to_f64()
    );

    let (ex1, ex2) = fixtures::vehicle_pair();
    println!("\nvehicle rated (0.4, 0.1, 0.5) and (0.3, 0.5, 0.2):");
    for scheme in [
        CombineScheme::VeryPessimistic,
        CombineScheme::LessPessimistic,
        CombineScheme::LessOptimistic,
        CombineScheme::VeryOptimistic,
    ] {
        let fused = combine_scheme(&ex1, &ex2, scheme)?;
        println!(
            "  {:17} = ({:.4}, {:.4}, {:.4})",
            scheme.as_str(),
            fused.t.to_f64(),
            fused.i.to_f64(),
            fused.f.to_f64()
        );
    }

    println!("\nsame pair through min/max logic operators:");
    let pess = tnorm_fuse(&ex1, &ex2, &TNormConfig::MIN_MAX, FusionMode::Pessimistic, false)?;
    println!(
        "  pessimistic raw {} -> normalized {}",
        triple(&pess),
        triple(&normalize(&pess)?)
    );
    let opt = tnorm_fuse(&ex1, &ex2, &TNormConfig::MIN_MAX, FusionMode::Optimistic, false)?;
    println!(
        "  optimistic  raw {} -> normalized {}",
        triple(&opt),
        triple(&normalize(&opt)?)
    );

    let (alpha, gamma) = fixtures::soccer_pair();
    let both = tnorm_fuse(
        &alpha,
        &gamma,
        &TNormConfig::PRODUCT_SUM,
        FusionMode::Pessimistic,
        false,
    )?;
    println!(
        "\nchance both soccer teams win, product/probabilistic-sum: {}",
        triple(&both)
    );
    Ok(())
}

fn triple(np: &neutroprob::fusion::SubjectiveNP) -> String {
    format!(
        "({:.4}, {:.4}, {:.4})",
        np.t.to_f64(),
        np.i.to_f64(),
        np.f.to_f64()
    )
}
