use qconv::presets::preset;
use qconv::sim::{monte_carlo, ChannelParams, DecoderKind, Pipeline};

fn params(p: f64, seed: u64) -> ChannelParams {
    ChannelParams::new(p, seed)
}

#[test]
fn reports_are_deterministic_and_schedule_independent() {
    let pair = preset("f4_conv").unwrap();
    let pipe = Pipeline::new(&pair, DecoderKind::Table, 12).unwrap();
    let a = pipe.run(&params(0.01, 42), 50_000).unwrap();
    let b = pipe.run(&params(0.01, 42), 50_000).unwrap();
    assert_eq!(a, b);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let serial = pool.install(|| pipe.run(&params(0.01, 42), 50_000).unwrap());
    assert_eq!(a, serial);
    let other = pipe.run(&params(0.01, 43), 50_000).unwrap();
    assert_ne!(a.failures, other.failures);
}

#[test]
fn report_invariants() {
    for name in ["five_qubit", "steane", "tb9", "tb15", "f4_conv", "css_conv"] {
        let pair = preset(name).unwrap();
        let r = monte_carlo(
            &pair,
            DecoderKind::default_for(&pair),
            &params(0.02, 5),
            20_000,
        )
        .unwrap();
        assert!(r.failures <= r.trials);
        assert!(r.c_lo <= r.c && r.c <= r.c_hi, "{name}");
        assert_eq!(r.rng, qconv::sim::RNG_NAME);
    }
}

#[test]
fn zero_error_rate() {
    for name in ["five_qubit", "steane", "tb9", "tb15", "f4_conv", "css_conv"] {
        let pair = preset(name).unwrap();
        let r = monte_carlo(
            &pair,
            DecoderKind::default_for(&pair),
            &params(0.0, 1),
            1_000,
        )
        .unwrap();
        assert_eq!(r.rate, 0.0, "{name}");
    }
}

#[test]
fn confidence_interval_is_tight_with_enough_failures() {
    let pair = preset("f4_conv").unwrap();
    let r = monte_carlo(&pair, DecoderKind::Table, &params(8e-3, 9), 400_000).unwrap();
    assert!(r.failures >= 100);
    assert!((r.c_hi - r.c_lo) / 2.0 <= 0.2 * r.c);
}

#[test]
fn five_qubit_coefficient_near_ten() {
    let pair = preset("five_qubit").unwrap();
    let r = monte_carlo(
        &pair,
        DecoderKind::CosetLookup,
        &params(4e-3, 11),
        2_000_000,
    )
    .unwrap();
    assert!((8.0..=12.0).contains(&r.c), "c = {}", r.c);
}

#[test]
fn tb15_coefficient_below_union_bound() {
    let pair = preset("tb15").unwrap();
    let r = monte_carlo(&pair, DecoderKind::Table, &params(4e-3, 13), 1_000_000).unwrap();
    assert!(r.c <= 21.0 * 1.15, "c = {}", r.c);
}

#[test]
fn trellis_fails_no_more_often_than_table_on_same_errors() {
    let pair = preset("f4_conv").unwrap();
    let table = monte_carlo(&pair, DecoderKind::Table, &params(0.01, 17), 100_000).unwrap();
    let viterbi = monte_carlo(&pair, DecoderKind::Viterbi, &params(0.01, 17), 100_000).unwrap();
    assert!(table.failures >= viterbi.failures);
    assert_eq!(viterbi.detected, 0);
}

#[test]
fn bit_flip_only_channel_loads_one_plane() {
    let pair = preset("css_conv").unwrap();
    let mut p = params(0.01, 3);
    p.pauli_weights = [1.0, 0.0, 0.0];
    let x_only = monte_carlo(&pair, DecoderKind::Table, &p, 400_000).unwrap();
    let uniform = monte_carlo(&pair, DecoderKind::Table, &params(0.01, 3), 400_000).unwrap();
    // One plane at rate p against two planes at 2p/3 each: ratio near 9/8.
    let ratio = x_only.failures as f64 / uniform.failures as f64;
    assert!((0.9..=1.4).contains(&ratio), "ratio {ratio}");
}

#[test]
fn terminated_presets_simulate_with_coset_lookup() {
    let pair = preset("terminated_f4(3)").unwrap();
    let r = monte_carlo(&pair, DecoderKind::CosetLookup, &params(0.01, 2), 20_000).unwrap();
    assert!(r.failures > 0);
    assert_eq!(r.encoded_qubits, 5);
}
