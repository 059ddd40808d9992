//! Cycle index series up to weight 7, written with a common
//! denominator `n!` per weight: `(weight, [(numerator, [(cycle length, count)])])`.

use num_bigint::BigInt;
use num_rational::BigRational;
use trivalent::cycleindex::{zs_prime_dense, zs_prime_factored, DenseCycleIndex, PartitionType};

type Weight = (usize, &'static [(i64, &'static [(usize, usize)])]);
type Table = &'static [Weight];

const Z_S2: Table = &[
    (2, &[(2, &[(1, 2)]), (2, &[(2, 1)])]),
    (3, &[(4, &[(1, 3)]), (6, &[(1, 1), (2, 1)]), (2, &[(3, 1)])]),
    (
        4,
        &[
            (10, &[(1, 4)]),
            (24, &[(1, 2), (2, 1)]),
            (8, &[(1, 1), (3, 1)]),
            (18, &[(2, 2)]),
            (12, &[(4, 1)]),
        ],
    ),
    (
        5,
        &[
            (26, &[(1, 5)]),
            (80, &[(1, 3), (2, 1)]),
            (40, &[(1, 2), (3, 1)]),
            (90, &[(1, 1), (2, 2)]),
            (60, &[(1, 1), (4, 1)]),
            (40, &[(2, 1), (3, 1)]),
            (24, &[(5, 1)]),
        ],
    ),
    (
        6,
        &[
            (76, &[(1, 6)]),
            (300, &[(1, 4), (2, 1)]),
            (160, &[(1, 3), (3, 1)]),
            (540, &[(1, 2), (2, 2)]),
            (360, &[(1, 2), (4, 1)]),
            (240, &[(1, 1), (2, 1), (3, 1)]),
            (144, &[(1, 1), (5, 1)]),
            (300, &[(2, 3)]),
            (360, &[(2, 1), (4, 1)]),
            (160, &[(3, 2)]),
            (240, &[(6, 1)]),
        ],
    ),
    (
        7,
        &[
            (232, &[(1, 7)]),
            (1092, &[(1, 5), (2, 1)]),
            (700, &[(1, 4), (3, 1)]),
            (2520, &[(1, 3), (2, 2)]),
            (1680, &[(1, 3), (4, 1)]),
            (1680, &[(1, 2), (2, 1), (3, 1)]),
            (1008, &[(1, 2), (5, 1)]),
            (2100, &[(1, 1), (2, 3)]),
            (2520, &[(1, 1), (2, 1), (4, 1)]),
            (1120, &[(1, 1), (3, 2)]),
            (1680, &[(1, 1), (6, 1)]),
            (1260, &[(2, 2), (3, 1)]),
            (1008, &[(2, 1), (5, 1)]),
            (840, &[(3, 1), (4, 1)]),
            (720, &[(7, 1)]),
        ],
    ),
];

const Z_S3: Table = &[
    (2, &[(1, &[(1, 2)]), (1, &[(2, 1)])]),
    (3, &[(3, &[(1, 3)]), (3, &[(1, 1), (2, 1)]), (6, &[(3, 1)])]),
    (
        4,
        &[
            (9, &[(1, 4)]),
            (6, &[(1, 2), (2, 1)]),
            (24, &[(1, 1), (3, 1)]),
            (3, &[(2, 2)]),
            (6, &[(4, 1)]),
        ],
    ),
    (
        5,
        &[
            (21, &[(1, 5)]),
            (30, &[(1, 3), (2, 1)]),
            (60, &[(1, 2), (3, 1)]),
            (15, &[(1, 1), (2, 2)]),
            (30, &[(1, 1), (4, 1)]),
            (60, &[(2, 1), (3, 1)]),
            (24, &[(5, 1)]),
        ],
    ),
    (
        6,
        &[
            (81, &[(1, 6)]),
            (135, &[(1, 4), (2, 1)]),
            (360, &[(1, 3), (3, 1)]),
            (45, &[(1, 2), (2, 2)]),
            (90, &[(1, 2), (4, 1)]),
            (360, &[(1, 1), (2, 1), (3, 1)]),
            (144, &[(1, 1), (5, 1)]),
            (135, &[(2, 3)]),
            (90, &[(2, 1), (4, 1)]),
            (360, &[(3, 2)]),
            (360, &[(6, 1)]),
        ],
    ),
    (
        7,
        &[
            (351, &[(1, 7)]),
            (441, &[(1, 5), (2, 1)]),
            (1890, &[(1, 4), (3, 1)]),
            (315, &[(1, 3), (2, 2)]),
            (630, &[(1, 3), (4, 1)]),
            (1260, &[(1, 2), (2, 1), (3, 1)]),
            (504, &[(1, 2), (5, 1)]),
            (945, &[(1, 1), (2, 3)]),
            (630, &[(1, 1), (2, 1), (4, 1)]),
            (2520, &[(1, 1), (3, 2)]),
            (2520, &[(1, 1), (6, 1)]),
            (630, &[(2, 2), (3, 1)]),
            (504, &[(2, 1), (5, 1)]),
            (1260, &[(3, 1), (4, 1)]),
            (720, &[(7, 1)]),
        ],
    ),
];

const Z_PRODUCT: Table = &[
    (2, &[(2, &[(1, 2)]), (2, &[(2, 1)])]),
    (
        3,
        &[(12, &[(1, 3)]), (6, &[(1, 1), (2, 1)]), (6, &[(3, 1)])],
    ),
    (
        4,
        &[
            (90, &[(1, 4)]),
            (24, &[(1, 2), (2, 1)]),
            (24, &[(1, 1), (3, 1)]),
            (18, &[(2, 2)]),
            (12, &[(4, 1)]),
        ],
    ),
    (
        5,
        &[
            (546, &[(1, 5)]),
            (240, &[(1, 3), (2, 1)]),
            (120, &[(1, 2), (3, 1)]),
            (90, &[(1, 1), (2, 2)]),
            (60, &[(1, 1), (4, 1)]),
            (120, &[(2, 1), (3, 1)]),
            (24, &[(5, 1)]),
        ],
    ),
    (
        6,
        &[
            (6156, &[(1, 6)]),
            (2700, &[(1, 4), (2, 1)]),
            (1440, &[(1, 3), (3, 1)]),
            (540, &[(1, 2), (2, 2)]),
            (360, &[(1, 2), (4, 1)]),
            (720, &[(1, 1), (2, 1), (3, 1)]),
            (144, &[(1, 1), (5, 1)]),
            (2700, &[(2, 3)]),
            (360, &[(2, 1), (4, 1)]),
            (1440, &[(3, 2)]),
            (720, &[(6, 1)]),
        ],
    ),
    (
        7,
        &[
            (81432, &[(1, 7)]),
            (22932, &[(1, 5), (2, 1)]),
            (18900, &[(1, 4), (3, 1)]),
            (7560, &[(1, 3), (2, 2)]),
            (5040, &[(1, 3), (4, 1)]),
            (5040, &[(1, 2), (2, 1), (3, 1)]),
            (1008, &[(1, 2), (5, 1)]),
            (18900, &[(1, 1), (2, 3)]),
            (2520, &[(1, 1), (2, 1), (4, 1)]),
            (10080, &[(1, 1), (3, 2)]),
            (5040, &[(1, 1), (6, 1)]),
            (3780, &[(2, 2), (3, 1)]),
            (1008, &[(2, 1), (5, 1)]),
            (2520, &[(3, 1), (4, 1)]),
            (720, &[(7, 1)]),
        ],
    ),
];

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn assert_table(z: &DenseCycleIndex, table: Table) {
    // weights 0 and 1 are 1 and x1 in all three
    assert_eq!(
        z.coeff(&PartitionType::from_parts(&[])),
        BigRational::from_integer(BigInt::from(1))
    );
    assert_eq!(
        z.coeff(&PartitionType::from_parts(&[(1, 1)])),
        BigRational::from_integer(BigInt::from(1))
    );
    for &(w, terms) in table {
        let homogeneous = z.homogeneous(w);
        assert_eq!(
            homogeneous.terms().count(),
            terms.len(),
            "weight {w}: number of monomials"
        );
        for &(num, parts) in terms {
            let ty = PartitionType::from_parts(parts);
            let expected = BigRational::new(BigInt::from(num), BigInt::from(factorial(w)));
            assert_eq!(z.coeff(&ty), expected, "weight {w}, monomial {ty}");
        }
    }
}

#[test]
fn involution_table() {
    assert_table(&zs_prime_dense(2, 7).unwrap(), Z_S2);
}

#[test]
fn order_three_table() {
    assert_table(&zs_prime_dense(3, 7).unwrap(), Z_S3);
}

#[test]
fn product_table() {
    let product = zs_prime_dense(2, 7)
        .unwrap()
        .hadamard(&zs_prime_dense(3, 7).unwrap())
        .unwrap();
    assert_table(&product, Z_PRODUCT);
    let factored = zs_prime_factored(2, 7)
        .unwrap()
        .hadamard(&zs_prime_factored(3, 7).unwrap())
        .unwrap();
    assert_eq!(factored.to_dense(7).unwrap(), product);
}
