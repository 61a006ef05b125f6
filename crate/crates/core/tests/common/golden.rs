// Generated by tests/oracle/golden.py (mpmath, 50 digits). Do not edit.

pub const EXP: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 1.0), (1.4686939399158851, 2.2873552871788423)),
    ((0.0, 1.0), (0.5403023058681398, 0.8414709848078965)),
    ((-3.5, 2.25), (-0.018969199741145398, 0.023495774657053672)),
    ((4.0, -7.0), (41.16166839296142, -35.87025288661358)),
];

pub const COS: &[((f64, f64), (f64, f64))] = &[
    ((0.0, 1.0), (1.5430806348152437, 0.0)),
    ((1.0, 1.0), (0.833730025131149, -0.9888977057628651)),
    ((2.5, -0.75), (-1.0372272476741875, 0.4921336576941946)),
];

pub const SIN: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 1.0), (1.2984575814159773, 0.6349639147847361)),
    ((-0.3, 2.0), (-1.111804848129436, 3.4648720885812345)),
];

pub const LOG: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 1.0), (0.34657359027997264, 0.7853981633974483)),
    ((-2.0, 0.5), (0.7234594914681627, 2.896613990462929)),
    ((0.1, -3.0), (1.0991675358101232, -1.5374753309166493)),
];

pub const POW2_I: (f64, f64) = (0.7692389013639721, 0.6389612763136348);

pub const GAMMA: &[((f64, f64), (f64, f64))] = &[
    ((1.0, 1.0), (0.49801566811835607, -0.15494982830181067)),
    ((0.3, 0.7), (0.30968625674374917, -0.8567877529392706)),
    ((-2.5, 1.5), (0.003412139564239149, -0.024053490434664735)),
    ((10.2, -3.1), (241008.43902339335, -254631.16883633545)),
    (
        (0.1, 25.0),
        (-8.257834451434721e-19, -6.042200137881687e-18),
    ),
    (
        (-7.3, 0.2),
        (0.00022606131515147553, 0.00023065434516651964),
    ),
    (
        (30.0, 20.0),
        (1.5609654275290076e+28, -1.0795336401868512e+27),
    ),
    ((0.5, -0.5), (0.8181639995417473, 0.7633138287139826)),
    ((-0.5, 0.0), (-3.544907701811032, 0.0)),
    ((3.7, 0.0), (4.170651783796604, 0.0)),
];

pub const ZETA: &[((f64, f64), (f64, f64))] = &[
    ((2.0, 0.0), (1.6449340668482264, 0.0)),
    ((4.0, 0.0), (1.0823232337111381, 0.0)),
    ((0.5, 0.0), (-1.4603545088095868, 0.0)),
    ((0.5, 14.0), (0.02224114260999359, -0.10325812326645006)),
    ((0.25, 30.0), (-0.5864827888392179, -0.6111496310764428)),
    ((3.0, 50.0), (0.8857531745717823, 0.04849147639256098)),
    ((0.7, 100.0), (2.108484299177043, -0.04959161750011454)),
    ((0.5, 99.5), (1.5922916680040429, 1.2972001583316535)),
    ((1.5, -20.0), (0.8473029322755534, 0.43554347280947436)),
    ((0.01, 5.0), (0.6345654611868856, 0.28941200831771297)),
    ((-1.0, 3.0), (0.2741240846757193, 0.058777533260970814)),
    ((-3.5, 0.0), (0.004441011335479432, 0.0)),
    ((-9.5, 40.0), (99738827.28232098, -68542569.70556527)),
    ((-0.02, 0.01), (-0.4819201149280882, -0.00879888676272271)),
    ((0.03, -0.04), (-0.5267435588377704, 0.03920552233115694)),
    (
        (1.0, 9.064720283654388),
        (1.3465795428363172, 0.1098831367962695),
    ),
    (
        (1.0004, 9.064420283654389),
        (1.346469107040821, 0.10990065881055616),
    ),
    (
        (1.0, 18.129440567308777),
        (1.8247448778569364, -0.2160352160667758),
    ),
    ((1.00005, 2e-05), (17241.956529624164, -6896.551722656532)),
    ((0.9999, 0.0), (-9999.422791617833, 0.0)),
];

pub const XI: &[((f64, f64), (f64, f64))] = &[
    ((0.5, 0.0), (-0.4971207781883141, 0.0)),
    ((0.3, 7.0), (-0.15200945338940677, 0.010817164613535754)),
    ((0.7, 7.0), (-0.15200945338940677, -0.01081716461353575)),
    ((-1.0, 3.0), (-0.4162712598996238, 0.0888233049656394)),
    ((2.0, -4.0), (-0.3471315127705087, 0.10118929375003946)),
    ((1.0, 0.0), (-0.5, 0.0)),
    ((0.0, 0.0), (-0.5, 0.0)),
    (
        (1.00005, 3e-05),
        (-0.5000005774113992, -3.4647065033791853e-07),
    ),
    ((-2.0, 0.0), (-0.5739398940467555, 0.0)),
    (
        (-2.00003, 1e-05),
        (-0.5739418636615659, 6.565438139689062e-07),
    ),
    ((-4.0, 0.0), (-0.7879706062703883, 0.0)),
    (
        (0.5, 30.0),
        (1.5016622479802074e-08, -7.819211910907267e-59),
    ),
    (
        (0.5, 60.0),
        (2.9092748239358863e-18, -2.7517665585307234e-68),
    ),
    ((0.2, 5.0), (-0.2754826321361744, 0.019978306029123188)),
    ((10.5, 1.0), (-3.8955694653579855, -1.6834770553570848)),
    ((-9.5, 2.0), (-2.764430479929295, 2.947824667631033)),
];

pub const ZETA_ZEROS: &[f64] = &[
    14.134725141734695,
    21.022039638771556,
    25.01085758014569,
    30.424876125859512,
    32.93506158773919,
];

pub const XI_ON_LINE: &[(f64, f64)] = &[
    (0.0, -0.4971207781883141),
    (5.0, -0.2755499973442042),
    (10.0, -0.037967850310935684),
    (14.0, -0.00020129444423525752),
    (20.0, 3.665542775560946e-05),
    (25.0, -1.3824572165098989e-08),
    (30.0, 1.5016622479802074e-08),
    (45.0, -1.2755608300304362e-12),
];
pub const GAMMA_GRID_MIN: f64 = 1.6163583975902363e-07;
pub const GAMMA_GRID_ARGMIN: (f64, f64) = (-4.5, -5.0);

pub const SCAN_OFFLINE_MIN: f64 = 1.512476252217919e-08;
pub const SCAN_OFFLINE_ARGMIN: (f64, f64) = (0.45, 30.0);
