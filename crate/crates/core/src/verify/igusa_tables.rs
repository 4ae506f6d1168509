//! Integer coefficient tables for the classical invariants
//! (I2, I4, I6, I10) of a binary sextic, as isobaric polynomials
//! in the coefficients F0..F6. Generated by
//! tools/gen_invariant_tables.py; do not edit by hand.

pub static I2_TERMS: [(i64, [u8; 7]); 4] = [
    (6, [0, 0, 0, 2, 0, 0, 0]),
    (-16, [0, 0, 1, 0, 1, 0, 0]),
    (40, [0, 1, 0, 0, 0, 1, 0]),
    (-240, [1, 0, 0, 0, 0, 0, 1]),
];

pub static I4_TERMS: [(i64, [u8; 7]); 16] = [
    (4, [0, 0, 2, 0, 2, 0, 0]),
    (-12, [0, 0, 2, 1, 0, 1, 0]),
    (48, [0, 0, 3, 0, 0, 0, 1]),
    (-12, [0, 1, 0, 1, 2, 0, 0]),
    (36, [0, 1, 0, 2, 0, 1, 0]),
    (4, [0, 1, 1, 0, 1, 1, 0]),
    (-180, [0, 1, 1, 1, 0, 0, 1]),
    (-80, [0, 2, 0, 0, 0, 2, 0]),
    (300, [0, 2, 0, 0, 1, 0, 1]),
    (48, [1, 0, 0, 0, 3, 0, 0]),
    (-180, [1, 0, 0, 1, 1, 1, 0]),
    (324, [1, 0, 0, 2, 0, 0, 1]),
    (300, [1, 0, 1, 0, 0, 2, 0]),
    (-504, [1, 0, 1, 0, 1, 0, 1]),
    (-540, [1, 1, 0, 0, 0, 1, 1]),
    (1620, [2, 0, 0, 0, 0, 0, 2]),
];

pub static I6_TERMS: [(i64, [u8; 7]); 56] = [
    (8, [0, 0, 2, 2, 2, 0, 0]),
    (-24, [0, 0, 2, 3, 0, 1, 0]),
    (-24, [0, 0, 3, 0, 3, 0, 0]),
    (76, [0, 0, 3, 1, 1, 1, 0]),
    (60, [0, 0, 3, 2, 0, 0, 1]),
    (-36, [0, 0, 4, 0, 0, 2, 0]),
    (-160, [0, 0, 4, 0, 1, 0, 1]),
    (-24, [0, 1, 0, 3, 2, 0, 0]),
    (72, [0, 1, 0, 4, 0, 1, 0]),
    (76, [0, 1, 1, 1, 3, 0, 0]),
    (-238, [0, 1, 1, 2, 1, 1, 0]),
    (-198, [0, 1, 1, 3, 0, 0, 1]),
    (28, [0, 1, 2, 0, 2, 1, 0]),
    (26, [0, 1, 2, 1, 0, 2, 0]),
    (492, [0, 1, 2, 1, 1, 0, 1]),
    (616, [0, 1, 3, 0, 0, 1, 1]),
    (-36, [0, 2, 0, 0, 4, 0, 0]),
    (26, [0, 2, 0, 1, 2, 1, 0]),
    (176, [0, 2, 0, 2, 0, 2, 0]),
    (330, [0, 2, 0, 2, 1, 0, 1]),
    (64, [0, 2, 1, 0, 1, 2, 0]),
    (-640, [0, 2, 1, 0, 2, 0, 1]),
    (-1860, [0, 2, 1, 1, 0, 1, 1]),
    (-900, [0, 2, 2, 0, 0, 0, 2]),
    (-320, [0, 3, 0, 0, 0, 3, 0]),
    (1600, [0, 3, 0, 0, 1, 1, 1]),
    (2250, [0, 3, 0, 1, 0, 0, 2]),
    (60, [1, 0, 0, 2, 3, 0, 0]),
    (-198, [1, 0, 0, 3, 1, 1, 0]),
    (162, [1, 0, 0, 4, 0, 0, 1]),
    (-160, [1, 0, 1, 0, 4, 0, 0]),
    (492, [1, 0, 1, 1, 2, 1, 0]),
    (330, [1, 0, 1, 2, 0, 2, 0]),
    (-468, [1, 0, 1, 2, 1, 0, 1]),
    (-640, [1, 0, 2, 0, 1, 2, 0]),
    (424, [1, 0, 2, 0, 2, 0, 1]),
    (-876, [1, 0, 2, 1, 0, 1, 1]),
    (-96, [1, 0, 3, 0, 0, 0, 2]),
    (616, [1, 1, 0, 0, 3, 1, 0]),
    (-1860, [1, 1, 0, 1, 1, 2, 0]),
    (-876, [1, 1, 0, 1, 2, 0, 1]),
    (1818, [1, 1, 0, 2, 0, 1, 1]),
    (1600, [1, 1, 1, 0, 0, 3, 0]),
    (3472, [1, 1, 1, 0, 1, 1, 1]),
    (3060, [1, 1, 1, 1, 0, 0, 2]),
    (-2240, [1, 2, 0, 0, 0, 2, 1]),
    (-18600, [1, 2, 0, 0, 1, 0, 2]),
    (-900, [2, 0, 0, 0, 2, 2, 0]),
    (-96, [2, 0, 0, 0, 3, 0, 1]),
    (2250, [2, 0, 0, 1, 0, 3, 0]),
    (3060, [2, 0, 0, 1, 1, 1, 1]),
    (-10044, [2, 0, 0, 2, 0, 0, 2]),
    (-18600, [2, 0, 1, 0, 0, 2, 1]),
    (20664, [2, 0, 1, 0, 1, 0, 2]),
    (59940, [2, 1, 0, 0, 0, 1, 2]),
    (-119880, [3, 0, 0, 0, 0, 0, 3]),
];

pub static I10_TERMS: [(i64, [u8; 7]); 246] = [
    (1, [0, 2, 2, 2, 2, 2, 0]),
    (-4, [0, 2, 2, 2, 3, 0, 1]),
    (-4, [0, 2, 2, 3, 0, 3, 0]),
    (18, [0, 2, 2, 3, 1, 1, 1]),
    (-27, [0, 2, 2, 4, 0, 0, 2]),
    (-4, [0, 2, 3, 0, 3, 2, 0]),
    (16, [0, 2, 3, 0, 4, 0, 1]),
    (18, [0, 2, 3, 1, 1, 3, 0]),
    (-80, [0, 2, 3, 1, 2, 1, 1]),
    (-6, [0, 2, 3, 2, 0, 2, 1]),
    (144, [0, 2, 3, 2, 1, 0, 2]),
    (-27, [0, 2, 4, 0, 0, 4, 0]),
    (144, [0, 2, 4, 0, 1, 2, 1]),
    (-128, [0, 2, 4, 0, 2, 0, 2]),
    (-192, [0, 2, 4, 1, 0, 1, 2]),
    (256, [0, 2, 5, 0, 0, 0, 3]),
    (-4, [0, 3, 0, 3, 2, 2, 0]),
    (16, [0, 3, 0, 3, 3, 0, 1]),
    (16, [0, 3, 0, 4, 0, 3, 0]),
    (-72, [0, 3, 0, 4, 1, 1, 1]),
    (108, [0, 3, 0, 5, 0, 0, 2]),
    (18, [0, 3, 1, 1, 3, 2, 0]),
    (-72, [0, 3, 1, 1, 4, 0, 1]),
    (-80, [0, 3, 1, 2, 1, 3, 0]),
    (356, [0, 3, 1, 2, 2, 1, 1]),
    (24, [0, 3, 1, 3, 0, 2, 1]),
    (-630, [0, 3, 1, 3, 1, 0, 2]),
    (-6, [0, 3, 2, 0, 2, 3, 0]),
    (24, [0, 3, 2, 0, 3, 1, 1]),
    (144, [0, 3, 2, 1, 0, 4, 0]),
    (-746, [0, 3, 2, 1, 1, 2, 1]),
    (560, [0, 3, 2, 1, 2, 0, 2]),
    (1020, [0, 3, 2, 2, 0, 1, 2]),
    (-36, [0, 3, 3, 0, 0, 3, 1]),
    (160, [0, 3, 3, 0, 1, 1, 2]),
    (-1600, [0, 3, 3, 1, 0, 0, 3]),
    (-27, [0, 4, 0, 0, 4, 2, 0]),
    (108, [0, 4, 0, 0, 5, 0, 1]),
    (144, [0, 4, 0, 1, 2, 3, 0]),
    (-630, [0, 4, 0, 1, 3, 1, 1]),
    (-128, [0, 4, 0, 2, 0, 4, 0]),
    (560, [0, 4, 0, 2, 1, 2, 1]),
    (825, [0, 4, 0, 2, 2, 0, 2]),
    (-900, [0, 4, 0, 3, 0, 1, 2]),
    (-192, [0, 4, 1, 0, 1, 4, 0]),
    (1020, [0, 4, 1, 0, 2, 2, 1]),
    (-900, [0, 4, 1, 0, 3, 0, 2]),
    (160, [0, 4, 1, 1, 0, 3, 1]),
    (-2050, [0, 4, 1, 1, 1, 1, 2]),
    (2250, [0, 4, 1, 2, 0, 0, 3]),
    (-50, [0, 4, 2, 0, 0, 2, 2]),
    (2000, [0, 4, 2, 0, 1, 0, 3]),
    (256, [0, 5, 0, 0, 0, 5, 0]),
    (-1600, [0, 5, 0, 0, 1, 3, 1]),
    (2250, [0, 5, 0, 0, 2, 1, 2]),
    (2000, [0, 5, 0, 1, 0, 2, 2]),
    (-3750, [0, 5, 0, 1, 1, 0, 3]),
    (-2500, [0, 5, 1, 0, 0, 1, 3]),
    (3125, [0, 6, 0, 0, 0, 0, 4]),
    (-4, [1, 0, 3, 2, 2, 2, 0]),
    (16, [1, 0, 3, 2, 3, 0, 1]),
    (16, [1, 0, 3, 3, 0, 3, 0]),
    (-72, [1, 0, 3, 3, 1, 1, 1]),
    (108, [1, 0, 3, 4, 0, 0, 2]),
    (16, [1, 0, 4, 0, 3, 2, 0]),
    (-64, [1, 0, 4, 0, 4, 0, 1]),
    (-72, [1, 0, 4, 1, 1, 3, 0]),
    (320, [1, 0, 4, 1, 2, 1, 1]),
    (24, [1, 0, 4, 2, 0, 2, 1]),
    (-576, [1, 0, 4, 2, 1, 0, 2]),
    (108, [1, 0, 5, 0, 0, 4, 0]),
    (-576, [1, 0, 5, 0, 1, 2, 1]),
    (512, [1, 0, 5, 0, 2, 0, 2]),
    (768, [1, 0, 5, 1, 0, 1, 2]),
    (-1024, [1, 0, 6, 0, 0, 0, 3]),
    (18, [1, 1, 1, 3, 2, 2, 0]),
    (-72, [1, 1, 1, 3, 3, 0, 1]),
    (-72, [1, 1, 1, 4, 0, 3, 0]),
    (324, [1, 1, 1, 4, 1, 1, 1]),
    (-486, [1, 1, 1, 5, 0, 0, 2]),
    (-80, [1, 1, 2, 1, 3, 2, 0]),
    (320, [1, 1, 2, 1, 4, 0, 1]),
    (356, [1, 1, 2, 2, 1, 3, 0]),
    (-1584, [1, 1, 2, 2, 2, 1, 1]),
    (-108, [1, 1, 2, 3, 0, 2, 1]),
    (2808, [1, 1, 2, 3, 1, 0, 2]),
    (24, [1, 1, 3, 0, 2, 3, 0]),
    (-96, [1, 1, 3, 0, 3, 1, 1]),
    (-630, [1, 1, 3, 1, 0, 4, 0]),
    (3272, [1, 1, 3, 1, 1, 2, 1]),
    (-2496, [1, 1, 3, 1, 2, 0, 2]),
    (-4464, [1, 1, 3, 2, 0, 1, 2]),
    (144, [1, 1, 4, 0, 0, 3, 1]),
    (-640, [1, 1, 4, 0, 1, 1, 2]),
    (6912, [1, 1, 4, 1, 0, 0, 3]),
    (-6, [1, 2, 0, 2, 3, 2, 0]),
    (24, [1, 2, 0, 2, 4, 0, 1]),
    (24, [1, 2, 0, 3, 1, 3, 0]),
    (-108, [1, 2, 0, 3, 2, 1, 1]),
    (162, [1, 2, 0, 4, 1, 0, 2]),
    (144, [1, 2, 1, 0, 4, 2, 0]),
    (-576, [1, 2, 1, 0, 5, 0, 1]),
    (-746, [1, 2, 1, 1, 2, 3, 0]),
    (3272, [1, 2, 1, 1, 3, 1, 1]),
    (560, [1, 2, 1, 2, 0, 4, 0]),
    (-2412, [1, 2, 1, 2, 1, 2, 1]),
    (-4536, [1, 2, 1, 2, 2, 0, 2]),
    (3942, [1, 2, 1, 3, 0, 1, 2]),
    (1020, [1, 2, 2, 0, 1, 4, 0]),
    (-5428, [1, 2, 2, 0, 2, 2, 1]),
    (4816, [1, 2, 2, 0, 3, 0, 2]),
    (-682, [1, 2, 2, 1, 0, 3, 1]),
    (10152, [1, 2, 2, 1, 1, 1, 2]),
    (-9720, [1, 2, 2, 2, 0, 0, 3]),
    (248, [1, 2, 3, 0, 0, 2, 2]),
    (-10560, [1, 2, 3, 0, 1, 0, 3]),
    (-36, [1, 3, 0, 0, 3, 3, 0]),
    (144, [1, 3, 0, 0, 4, 1, 1]),
    (160, [1, 3, 0, 1, 1, 4, 0]),
    (-682, [1, 3, 0, 1, 2, 2, 1]),
    (-120, [1, 3, 0, 1, 3, 0, 2]),
    (-208, [1, 3, 0, 2, 0, 3, 1]),
    (1980, [1, 3, 0, 2, 1, 1, 2]),
    (-1350, [1, 3, 0, 3, 0, 0, 3]),
    (-1600, [1, 3, 1, 0, 0, 5, 0]),
    (9768, [1, 3, 1, 0, 1, 3, 1]),
    (-13040, [1, 3, 1, 0, 2, 1, 2]),
    (-12330, [1, 3, 1, 1, 0, 2, 2]),
    (19800, [1, 3, 1, 1, 1, 0, 3]),
    (15600, [1, 3, 2, 0, 0, 1, 3]),
    (320, [1, 4, 0, 0, 0, 4, 1]),
    (-1700, [1, 4, 0, 0, 1, 2, 2]),
    (1500, [1, 4, 0, 0, 2, 0, 3]),
    (2250, [1, 4, 0, 1, 0, 1, 3]),
    (-22500, [1, 4, 1, 0, 0, 0, 4]),
    (-27, [2, 0, 0, 4, 2, 2, 0]),
    (108, [2, 0, 0, 4, 3, 0, 1]),
    (108, [2, 0, 0, 5, 0, 3, 0]),
    (-486, [2, 0, 0, 5, 1, 1, 1]),
    (729, [2, 0, 0, 6, 0, 0, 2]),
    (144, [2, 0, 1, 2, 3, 2, 0]),
    (-576, [2, 0, 1, 2, 4, 0, 1]),
    (-630, [2, 0, 1, 3, 1, 3, 0]),
    (2808, [2, 0, 1, 3, 2, 1, 1]),
    (162, [2, 0, 1, 4, 0, 2, 1]),
    (-4860, [2, 0, 1, 4, 1, 0, 2]),
    (-128, [2, 0, 2, 0, 4, 2, 0]),
    (512, [2, 0, 2, 0, 5, 0, 1]),
    (560, [2, 0, 2, 1, 2, 3, 0]),
    (-2496, [2, 0, 2, 1, 3, 1, 1]),
    (825, [2, 0, 2, 2, 0, 4, 0]),
    (-4536, [2, 0, 2, 2, 1, 2, 1]),
    (8208, [2, 0, 2, 2, 2, 0, 2]),
    (5832, [2, 0, 2, 3, 0, 1, 2]),
    (-900, [2, 0, 3, 0, 1, 4, 0]),
    (4816, [2, 0, 3, 0, 2, 2, 1]),
    (-4352, [2, 0, 3, 0, 3, 0, 2]),
    (-120, [2, 0, 3, 1, 0, 3, 1]),
    (-5760, [2, 0, 3, 1, 1, 1, 2]),
    (-8640, [2, 0, 3, 2, 0, 0, 3]),
    (-192, [2, 0, 4, 0, 0, 2, 2]),
    (9216, [2, 0, 4, 0, 1, 0, 3]),
    (-192, [2, 1, 0, 1, 4, 2, 0]),
    (768, [2, 1, 0, 1, 5, 0, 1]),
    (1020, [2, 1, 0, 2, 2, 3, 0]),
    (-4464, [2, 1, 0, 2, 3, 1, 1]),
    (-900, [2, 1, 0, 3, 0, 4, 0]),
    (3942, [2, 1, 0, 3, 1, 2, 1]),
    (5832, [2, 1, 0, 3, 2, 0, 2]),
    (-6318, [2, 1, 0, 4, 0, 1, 2]),
    (160, [2, 1, 1, 0, 3, 3, 0]),
    (-640, [2, 1, 1, 0, 4, 1, 1]),
    (-2050, [2, 1, 1, 1, 1, 4, 0]),
    (10152, [2, 1, 1, 1, 2, 2, 1]),
    (-5760, [2, 1, 1, 1, 3, 0, 2]),
    (1980, [2, 1, 1, 2, 0, 3, 1]),
    (-22896, [2, 1, 1, 2, 1, 1, 2]),
    (21384, [2, 1, 1, 3, 0, 0, 3]),
    (2250, [2, 1, 2, 0, 0, 5, 0]),
    (-13040, [2, 1, 2, 0, 1, 3, 1]),
    (15264, [2, 1, 2, 0, 2, 1, 2]),
    (16632, [2, 1, 2, 1, 0, 2, 2]),
    (-3456, [2, 1, 2, 1, 1, 0, 3]),
    (-21888, [2, 1, 3, 0, 0, 1, 3]),
    (-50, [2, 2, 0, 0, 2, 4, 0]),
    (248, [2, 2, 0, 0, 3, 2, 1]),
    (-192, [2, 2, 0, 0, 4, 0, 2]),
    (2000, [2, 2, 0, 1, 0, 5, 0]),
    (-12330, [2, 2, 0, 1, 1, 3, 1]),
    (16632, [2, 2, 0, 1, 2, 1, 2]),
    (15417, [2, 2, 0, 2, 0, 2, 2]),
    (-27540, [2, 2, 0, 2, 1, 0, 3]),
    (-1700, [2, 2, 1, 0, 0, 4, 1]),
    (8748, [2, 2, 1, 0, 1, 2, 2]),
    (-6480, [2, 2, 1, 0, 2, 0, 3]),
    (-31320, [2, 2, 1, 1, 0, 1, 3]),
    (43200, [2, 2, 2, 0, 0, 0, 4]),
    (410, [2, 3, 0, 0, 0, 3, 2]),
    (-1800, [2, 3, 0, 0, 1, 1, 3]),
    (27000, [2, 3, 0, 1, 0, 0, 4]),
    (256, [3, 0, 0, 0, 5, 2, 0]),
    (-1024, [3, 0, 0, 0, 6, 0, 1]),
    (-1600, [3, 0, 0, 1, 3, 3, 0]),
    (6912, [3, 0, 0, 1, 4, 1, 1]),
    (2250, [3, 0, 0, 2, 1, 4, 0]),
    (-9720, [3, 0, 0, 2, 2, 2, 1]),
    (-8640, [3, 0, 0, 2, 3, 0, 2]),
    (-1350, [3, 0, 0, 3, 0, 3, 1]),
    (21384, [3, 0, 0, 3, 1, 1, 2]),
    (-8748, [3, 0, 0, 4, 0, 0, 3]),
    (2000, [3, 0, 1, 0, 2, 4, 0]),
    (-10560, [3, 0, 1, 0, 3, 2, 1]),
    (9216, [3, 0, 1, 0, 4, 0, 2]),
    (-3750, [3, 0, 1, 1, 0, 5, 0]),
    (19800, [3, 0, 1, 1, 1, 3, 1]),
    (-3456, [3, 0, 1, 1, 2, 1, 2]),
    (-27540, [3, 0, 1, 2, 0, 2, 2]),
    (3888, [3, 0, 1, 2, 1, 0, 3]),
    (1500, [3, 0, 2, 0, 0, 4, 1]),
    (-6480, [3, 0, 2, 0, 1, 2, 2]),
    (-17280, [3, 0, 2, 0, 2, 0, 3]),
    (46656, [3, 0, 2, 1, 0, 1, 3]),
    (-13824, [3, 0, 3, 0, 0, 0, 4]),
    (-2500, [3, 1, 0, 0, 1, 5, 0]),
    (15600, [3, 1, 0, 0, 2, 3, 1]),
    (-21888, [3, 1, 0, 0, 3, 1, 2]),
    (2250, [3, 1, 0, 1, 0, 4, 1]),
    (-31320, [3, 1, 0, 1, 1, 2, 2]),
    (46656, [3, 1, 0, 1, 2, 0, 3]),
    (15552, [3, 1, 0, 2, 0, 1, 3]),
    (-1800, [3, 1, 1, 0, 0, 3, 2]),
    (31968, [3, 1, 1, 0, 1, 1, 3]),
    (-77760, [3, 1, 1, 1, 0, 0, 4]),
    (540, [3, 2, 0, 0, 0, 2, 3]),
    (-32400, [3, 2, 0, 0, 1, 0, 4]),
    (3125, [4, 0, 0, 0, 0, 6, 0]),
    (-22500, [4, 0, 0, 0, 1, 4, 1]),
    (43200, [4, 0, 0, 0, 2, 2, 2]),
    (-13824, [4, 0, 0, 0, 3, 0, 3]),
    (27000, [4, 0, 0, 1, 0, 3, 2]),
    (-77760, [4, 0, 0, 1, 1, 1, 3]),
    (34992, [4, 0, 0, 2, 0, 0, 4]),
    (-32400, [4, 0, 1, 0, 0, 2, 3]),
    (62208, [4, 0, 1, 0, 1, 0, 4]),
    (38880, [4, 1, 0, 0, 0, 1, 4]),
    (-46656, [5, 0, 0, 0, 0, 0, 5]),
];

