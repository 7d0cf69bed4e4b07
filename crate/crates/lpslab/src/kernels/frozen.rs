//! Frozen calibration constants for the analytic wavelet mother.
//!
//! The mother is a cosine packet psi(x) = KAPPA * sum_i THETA[i] *
//! cos^{POWER[i]}(pi x / (2 R_PSI)) * cos(OMEGA[i] x) on |x| < R_PSI.
//! The tap coefficients were produced once by a Gauss-Newton design pass
//! that flattens the squared scale-table symbols over the covered band,
//! zeroes moments 0..3 (closed-form moment rows; odd orders vanish by
//! parity), nulls the sampled grid moments at every working scale, and
//! confines the symbol to about +-1.25 octaves around its peak. They are
//! data, not tunables: the moment and frame certificates in this crate
//! re-verify every property the design promised.

/// Number of packet taps.
pub const N_TAPS: usize = 144;

/// Half-width of the mother support (radius of the taper window).
pub const R_PSI: f64 = 0.25;

/// Peak target of the symbol in zeta units (design parameter, recorded).
pub const ZETA_PEAK: f64 = 44.0;

/// Global normalization: makes sup_zeta |psi_hat(zeta)| = 1.
pub const KAPPA: f64 = 1.0448723705728475;

/// Taper power per tap (cos^p window; even powers only).
pub const TAP_POWER: [u32; N_TAPS] = [
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
    2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
    4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4,
    6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,
    6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,
    6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6,
    8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
    8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
    8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8, 8,
];

/// Carrier frequency per tap.
pub const TAP_OMEGA: [f64; N_TAPS] = [
    11.0, 15.965714285714286, 20.931428571428572, 25.897142857142853,
    30.862857142857145, 35.82857142857143, 40.794285714285714, 45.760000000000005,
    50.72571428571429, 55.691428571428574, 60.65714285714286, 65.62285714285714,
    70.58857142857143, 75.55428571428573, 80.52000000000001, 85.4857142857143,
    90.45142857142858, 95.41714285714286, 100.38285714285715, 105.34857142857145,
    110.31428571428572, 115.28, 120.2457142857143, 125.21142857142858,
    130.17714285714285, 135.14285714285714, 140.10857142857145, 145.0742857142857,
    150.04000000000002, 155.0057142857143, 159.9714285714286, 164.93714285714287,
    169.90285714285716, 174.86857142857144, 179.83428571428573, 184.8,
    11.0, 15.965714285714286, 20.931428571428572, 25.897142857142853,
    30.862857142857145, 35.82857142857143, 40.794285714285714, 45.760000000000005,
    50.72571428571429, 55.691428571428574, 60.65714285714286, 65.62285714285714,
    70.58857142857143, 75.55428571428573, 80.52000000000001, 85.4857142857143,
    90.45142857142858, 95.41714285714286, 100.38285714285715, 105.34857142857145,
    110.31428571428572, 115.28, 120.2457142857143, 125.21142857142858,
    130.17714285714285, 135.14285714285714, 140.10857142857145, 145.0742857142857,
    150.04000000000002, 155.0057142857143, 159.9714285714286, 164.93714285714287,
    169.90285714285716, 174.86857142857144, 179.83428571428573, 184.8,
    11.0, 15.965714285714286, 20.931428571428572, 25.897142857142853,
    30.862857142857145, 35.82857142857143, 40.794285714285714, 45.760000000000005,
    50.72571428571429, 55.691428571428574, 60.65714285714286, 65.62285714285714,
    70.58857142857143, 75.55428571428573, 80.52000000000001, 85.4857142857143,
    90.45142857142858, 95.41714285714286, 100.38285714285715, 105.34857142857145,
    110.31428571428572, 115.28, 120.2457142857143, 125.21142857142858,
    130.17714285714285, 135.14285714285714, 140.10857142857145, 145.0742857142857,
    150.04000000000002, 155.0057142857143, 159.9714285714286, 164.93714285714287,
    169.90285714285716, 174.86857142857144, 179.83428571428573, 184.8,
    11.0, 15.965714285714286, 20.931428571428572, 25.897142857142853,
    30.862857142857145, 35.82857142857143, 40.794285714285714, 45.760000000000005,
    50.72571428571429, 55.691428571428574, 60.65714285714286, 65.62285714285714,
    70.58857142857143, 75.55428571428573, 80.52000000000001, 85.4857142857143,
    90.45142857142858, 95.41714285714286, 100.38285714285715, 105.34857142857145,
    110.31428571428572, 115.28, 120.2457142857143, 125.21142857142858,
    130.17714285714285, 135.14285714285714, 140.10857142857145, 145.0742857142857,
    150.04000000000002, 155.0057142857143, 159.9714285714286, 164.93714285714287,
    169.90285714285716, 174.86857142857144, 179.83428571428573, 184.8,
];

/// Designed tap coefficient per tap.
pub const TAP_THETA: [f64; N_TAPS] = [
    -0.23699883138879008, -0.5556426741447832, -0.4282907098828566, 0.03878173927909462,
    0.5427608481213474, 0.8241451645792937, 0.8024688594492919, 0.5664055569702349,
    0.29564026697905876, 0.16689742168154442, 0.24998269877845045, 0.4402174792486353,
    0.5168530827790108, 0.32926543933640456, -0.04608469556456825, -0.35142380411053914,
    -0.3742248824435206, -0.13407948758022004, 0.15154518651390375, 0.26880520318547724,
    0.1672115934157662, -0.046460159124195696, -0.2195676120244011, -0.25011552668170806,
    -0.12762395407561822, 0.0644228769086835, 0.19308450502709823, 0.17462673129531686,
    0.051323086428875626, -0.055798864295863254, -0.08152773893707849, -0.06559148941502532,
    -0.05240545539563684, -0.017390576787500445, 0.035668184236913814, 0.0055694678532607275,
    -0.015350317706241477, -0.06604657003441572, -0.0201831174392286, 0.12255805696169542,
    0.306703336769411, 0.45706177775188356, 0.5241004877956195, 0.5079950911116131,
    0.4478678022659841, 0.3877675691513153, 0.3457291472230887, 0.3072853751989917,
    0.24524616492311058, 0.14831869844188292, 0.03579321721880917, -0.05293017974165069,
    -0.08577699318637191, -0.061346475417284566, -0.010385281876013952, 0.025558438872765002,
    0.02197602648236263, -0.01464044806476851, -0.05520357215384818, -0.07015195145023936,
    -0.04851923863483697, -0.0027280125827320034, 0.040797913966493286, 0.058046111423529716,
    0.0422490059613671, 0.008273891078031809, -0.01979068425574501, -0.031261265882182254,
    -0.036621289879667895, -0.039768473217905574, -0.0032488527426604782, 0.11109173959596204,
    0.03591970745544328, 0.05025468643982975, 0.09682082540545547, 0.1751800618579993,
    0.2698271030321577, 0.3574210303313742, 0.4176794484464458, 0.4412603059285203,
    0.43062486296735614, 0.3948243747828255, 0.3428370746040186, 0.28013168697980073,
    0.20992962958673853, 0.13682770236386504, 0.0688646921435937, 0.015726613891140967,
    -0.015884113157437388, -0.026271244025134297, -0.022980330305129498, -0.016714962835097685,
    -0.015436530204331014, -0.020423378501794362, -0.02674243123932739, -0.027609870109186585,
    -0.01952808766707652, -0.00470636398561472, 0.01055340090894022, 0.01973253202006256,
    0.019145218055698993, 0.008933324026219935, -0.006290414538631911, -0.01614557131679261,
    -0.007718852967748137, 0.01717616370448652, 0.014301997113223691, -0.09797329659758643,
    0.06329325004364933, 0.09243833524177131, 0.1373686495736016, 0.1958242846930096,
    0.2605582524140672, 0.32112446529272076, 0.3671065204467924, 0.39114701681036856,
    0.3904783742782084, 0.3666612191409157, 0.3241978143591598, 0.2690263330574503,
    0.2075356990768032, 0.1460719558420073, 0.09048446612302996, 0.04536736034329626,
    0.013132282196665915, -0.006540776989072378, -0.016358099195575043, -0.02014421156449707,
    -0.02122112600938321, -0.021267867926173398, -0.02022039859658112, -0.017154390153938187,
    -0.011553402167398613, -0.004214687117968144, 0.002732535771879624, 0.006836732918010041,
    0.00701603899396841, 0.004822541172968764, 0.0032892333702843057, 0.001792037015365816,
    -0.01019314801401898, -0.04714125869723891, -0.08245178933959627, 0.06879420686918096,
];
