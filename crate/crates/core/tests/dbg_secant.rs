#[test]
fn debug_sign_variants() {
    use g2iso::algebra::{FpCtx, Poly};
    use g2iso::curve::Genus2Curve;
    use g2iso::jacobian::MumfordPoint;
    use g2iso::secant::{gamma_vector, sigma_seq, ProjPoint};
    let h = Genus2Curve::new(997, [630, 503, 64, 363, 99, 113, 1]).unwrap();
    let fp = *h.fp();
    let poly = |c: &[i64]| Poly::new(&fp, c.iter().map(|&x| fp.reduce_i64(x)).collect::<Vec<_>>());
    let cols: [[u64;7];4] = [
        [234, 780, 500, 680, 324, 742, 664],
        [319, 16, 565, 329, 68, 416, 395],
        [906, 29, 703, 823, 779, 468, 698],
        [896, 754, 398, 248, 868, 392, 952],
    ];
    let els = [
        MumfordPoint::new(poly(&[208, 392, 1]), poly(&[603, 579]), 2),
        MumfordPoint::new(poly(&[527, 48, 1]), poly(&[832, 918]), 2),
        MumfordPoint::new(poly(&[880, 428, 1]), poly(&[901, 252]), 2),
        MumfordPoint::new(poly(&[292, 348, 1]), poly(&[269, 596]), 2),
    ];
    // plus-sign variant of case 3
    let gamma_plus = |e: &MumfordPoint| -> ProjPoint {
        let hcoeffs = h.coeffs();
        let a1 = e.a().coeff(&fp, 1);
        let a0 = e.a().coeff(&fp, 0);
        let sig = sigma_seq(&fp, a1, a0, 6);
        let sigma = |k: i64| -> u64 { if k < 1 { 0 } else { sig[(k-1) as usize] } };
        let mut a0p = vec![1u64; 7];
        for i in 1..7 { a0p[i] = fp.mul(a0p[i-1], a0); }
        let v: Vec<u64> = (0..7i64).map(|i| {
            let mut acc = 0u64;
            for j in 0..7i64 {
                let t = fp.add(fp.mul(a0p[j as usize], sigma(i-j)), fp.mul(a0p[i as usize], sigma(j-i)));
                acc = fp.add(acc, fp.mul(hcoeffs[j as usize], t));
            }
            acc
        }).collect();
        ProjPoint::new(&fp, v)
    };
    for (i, e) in els.iter().enumerate() {
        let minus = gamma_vector(&h, e).unwrap();
        let plus = gamma_plus(e);
        let printed = ProjPoint::new(&fp, cols[i].to_vec());
        eprintln!("elem {i}: minus==printed {} plus==printed {} minus==plus {}",
            minus == printed, plus == printed, minus == plus);
    }
    // do the printed phi rows annihilate MY recomputed v_e?
    let phis: [[u64;7];3] = [
        [0, 1, 0, 0, 549, 742, 121],
        [0, 0, 1, 0, 332, 642, 285],
        [0, 0, 0, 1, 454, 701, 889],
    ];
    for (i, e) in els.iter().enumerate() {
        let v = gamma_vector(&h, e).unwrap();
        for (r, phi) in phis.iter().enumerate() {
            let mut dot = 0u64;
            for j in 0..7 { dot = fp.add(dot, fp.mul(phi[j], v.coords()[j])); }
            eprintln!("phi{r}·v{i} = {dot}");
        }
    }
}
