//! Joint expansion of the image-term part of the half-plane integrand in
//! `h = η²` and `p = 1 + cos φ`, through total degree 10.
//!
//! Each entry is `(i, j, c)` for a monomial `c h^i p^j`. Generated once with
//! exact rational arithmetic.

pub(super) type Monomial = (u8, u8, f64);

pub(super) const RHO: [Monomial; 66] = [
    (0, 0, 1.5),
    (1, 0, -2.0),
    (0, 1, 1.0),
    (2, 0, 2.34375),
    (1, 1, -1.75),
    (0, 2, 0.625),
    (3, 0, -2.625),
    (2, 1, 2.25),
    (1, 2, -1.375),
    (0, 3, 0.375),
    (4, 0, 2.87109375),
    (3, 1, -2.625),
    (2, 2, 1.96875),
    (1, 3, -1.0),
    (0, 4, 0.21875),
    (5, 0, -3.09375),
    (4, 1, 2.9296875),
    (3, 2, -2.4375),
    (2, 3, 1.59375),
    (1, 4, -0.6875),
    (0, 5, 0.125),
    (6, 0, 3.2991943359375),
    (5, 1, -3.1904296875),
    (4, 2, 2.81982421875),
    (3, 3, -2.109375),
    (2, 4, 1.212890625),
    (1, 5, -0.453125),
    (0, 6, 0.0703125),
    (7, 0, -3.4912109375),
    (6, 1, 3.42138671875),
    (5, 2, -3.14208984375),
    (4, 3, 2.55126953125),
    (3, 4, -1.71875),
    (2, 5, 0.87890625),
    (1, 6, -0.2890625),
    (0, 7, 0.0390625),
    (8, 0, 3.6723175048828125),
    (7, 1, -3.630859375),
    (6, 2, 3.42138671875),
    (5, 3, -2.9326171875),
    (4, 4, 2.1820068359375),
    (3, 5, -1.33203125),
    (2, 6, 0.6123046875),
    (1, 7, -0.1796875),
    (0, 8, 0.021484375),
    (9, 0, -3.84429931640625),
    (8, 1, 3.824066162109375),
    (7, 2, -3.6689453125),
    (6, 3, 3.265869140625),
    (5, 4, -2.599365234375),
    (4, 5, 1.77734375),
    (3, 6, -0.990234375),
    (2, 7, 0.4130859375),
    (1, 8, -0.109375),
    (0, 9, 0.01171875),
    (10, 0, 4.008482933044434),
    (9, 1, -4.004478454589844),
    (8, 2, 3.892353057861328),
    (7, 3, -3.56103515625),
    (6, 4, 2.974273681640625),
    (5, 5, -2.199462890625),
    (4, 6, 1.3885498046875),
    (3, 7, -0.7109375),
    (2, 8, 0.2713623046875),
    (1, 9, -0.0654296875),
    (0, 10, 0.00634765625),
];

pub(super) const PHI: [Monomial; 66] = [
    (0, 0, 1.5),
    (1, 0, -5.5),
    (0, 1, 1.0),
    (2, 0, 10.78125),
    (1, 1, -3.875),
    (0, 2, 0.625),
    (3, 0, -17.0625),
    (2, 1, 8.25),
    (1, 2, -2.5625),
    (0, 3, 0.375),
    (4, 0, 24.19921875),
    (3, 1, -13.78125),
    (2, 2, 5.90625),
    (1, 3, -1.625),
    (0, 4, 0.21875),
    (5, 0, -32.09765625),
    (4, 1, 20.2734375),
    (3, 2, -10.453125),
    (2, 3, 4.03125),
    (1, 4, -1.0),
    (0, 5, 0.125),
    (6, 0, 40.6900634765625),
    (5, 1, -27.60205078125),
    (4, 2, 16.03271484375),
    (3, 3, -7.55859375),
    (2, 4, 2.654296875),
    (1, 5, -0.6015625),
    (0, 6, 0.0703125),
    (7, 0, -49.92431640625),
    (6, 1, 35.68017578125),
    (5, 2, -22.518310546875),
    (4, 3, 12.11181640625),
    (3, 4, -5.263671875),
    (2, 5, 1.69921875),
    (1, 6, -0.35546875),
    (0, 7, 0.0390625),
    (8, 0, 59.75862121582031),
    (7, 1, -44.443115234375),
    (6, 2, 29.81494140625),
    (5, 3, -17.595703125),
    (4, 4, 8.8153076171875),
    (3, 5, -3.5556640625),
    (2, 6, 1.0634765625),
    (1, 7, -0.20703125),
    (0, 8, 0.021484375),
    (9, 0, -70.15846252441406),
    (8, 1, 53.840423583984375),
    (7, 2, -37.8494873046875),
    (6, 3, 23.927490234375),
    (5, 4, -13.263427734375),
    (4, 5, 6.220703125),
    (3, 6, -2.34228515625),
    (2, 7, 0.6533203125),
    (1, 8, -0.119140625),
    (0, 9, 0.01171875),
    (10, 0, 81.09469318389893),
    (9, 1, -63.83138656616211),
    (8, 2, 46.5640754699707),
    (7, 3, -31.03765869140625),
    (6, 4, 18.553802490234375),
    (5, 5, -9.6976318359375),
    (4, 6, 4.2767333984375),
    (3, 7, -1.5107421875),
    (2, 8, 0.3951416015625),
    (1, 9, -0.06787109375),
    (0, 10, 0.00634765625),
];

pub(super) const Z: [Monomial; 66] = [
    (0, 0, 1.5),
    (1, 0, -5.0),
    (0, 1, 1.0),
    (2, 0, 9.84375),
    (1, 1, -3.75),
    (0, 2, 0.625),
    (3, 0, -15.75),
    (2, 1, 7.875),
    (1, 2, -2.625),
    (0, 3, 0.375),
    (4, 0, 22.55859375),
    (3, 1, -13.125),
    (2, 2, 5.90625),
    (1, 3, -1.75),
    (0, 4, 0.21875),
    (5, 0, -30.1640625),
    (4, 1, 19.3359375),
    (3, 2, -10.3125),
    (2, 3, 4.21875),
    (1, 4, -1.125),
    (0, 5, 0.125),
    (6, 0, 38.4906005859375),
    (5, 1, -26.3935546875),
    (4, 2, 15.71044921875),
    (3, 3, -7.734375),
    (2, 4, 2.900390625),
    (1, 5, -0.703125),
    (0, 6, 0.0703125),
    (7, 0, -47.48046875),
    (6, 1, 34.2138671875),
    (5, 2, -21.99462890625),
    (4, 3, 12.21923828125),
    (3, 4, -5.5859375),
    (2, 5, 1.93359375),
    (1, 6, -0.4296875),
    (0, 7, 0.0390625),
    (8, 0, 57.08784484863281),
    (7, 1, -42.732421875),
    (6, 2, 29.081787109375),
    (5, 3, -17.595703125),
    (4, 4, 9.1644287109375),
    (3, 5, -3.91015625),
    (2, 6, 1.2568359375),
    (1, 7, -0.2578125),
    (0, 8, 0.021484375),
    (9, 0, -67.27523803710938),
    (8, 1, 51.898040771484375),
    (7, 2, -36.9052734375),
    (6, 3, 23.794189453125),
    (5, 4, -13.5966796875),
    (4, 5, 6.6650390625),
    (3, 6, -2.666015625),
    (2, 7, 0.7998046875),
    (1, 8, -0.15234375),
    (0, 9, 0.01171875),
    (10, 0, 78.01124477386475),
    (9, 1, -61.668968200683594),
    (8, 2, 45.41078567504883),
    (7, 3, -30.75439453125),
    (6, 4, 18.837066650390625),
    (5, 5, -10.197509765625),
    (4, 6, 4.7210693359375),
    (3, 7, -1.77734375),
    (2, 8, 0.4998779296875),
    (1, 9, -0.0888671875),
    (0, 10, 0.00634765625),
];
