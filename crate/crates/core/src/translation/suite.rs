use super::Problem;

const SUITE: &[(&str, &[&str], &str)] = &[
    ("reflexivity", &[], "x1 == x1"),
    ("center is a fixed point", &["x1 == c"], "~x1 == x1"),
    ("involution has other points", &[], "~x1 == x1"),
    ("double involution", &[], "~~x1 == x1"),
    (
        "normality",
        &[],
        "(x1 cap ~x1) cup (x2 cup ~x2) == x2 cup ~x2",
    ),
    ("box is deflationary", &[], "Box(x1) cap x1 == Box(x1)"),
    ("box is idempotent", &[], "Box(Box(x1)) == Box(x1)"),
    ("box fixes c", &[], "Box(c) == c"),
    (
        "box preserves meets",
        &[],
        "Box(x1 cap x2) == Box(x1) cap Box(x2)",
    ),
    (
        "box preserves joins",
        &[],
        "Box(x1 cup x2) == Box(x1) cup Box(x2)",
    ),
    ("tensor commutes", &[], "x1 (x) x2 == x2 (x) x1"),
    (
        "tensor distributes over cup",
        &[],
        "x1 (x) (x2 cup x3) == (x1 (x) x2) cup (x1 (x) x3)",
    ),
    (
        "lattice distributivity",
        &[],
        "x1 cap (x2 cup x3) == (x1 cap x2) cup (x1 cap x3)",
    ),
    ("tensor is idempotent", &[], "x1 (x) x1 == x1"),
    (
        "idempotent elements lie below c",
        &["x1 (x) x1 == x1"],
        "x1 cap c == x1",
    ),
    ("wand is dual to tensor", &[], "x1 ~> x2 == ~(x1 (x) ~x2)"),
    ("prelinearity", &[], "(x1 ~> x2) cup (x2 ~> x1) == 1"),
    (
        "everything above c is closed",
        &[],
        "Box(x1 cup c) == x1 cup c",
    ),
    (
        "box is monotone",
        &["x1 cap x2 == x1"],
        "Box(x1) cap Box(x2) == Box(x1)",
    ),
    ("box of a negated box", &[], "Box(~Box(x1)) == ~Box(x1)"),
    (
        "tensor below c",
        &["x1 cup c == c", "x2 cup c == c"],
        "x1 (x) x2 == x1 cap x2",
    ),
    (
        "contradiction below c",
        &[],
        "(~x1 (x) x1) cap c == ~x1 (x) x1",
    ),
    ("self-dual elements", &["x1 == ~x1"], "x1 == c"),
    ("zero implies everything", &[], "0 ~> x1 == 1"),
    (
        "box of a wand",
        &[],
        "Box(Box(x1) ~> x2) == Box(x1) ~> Box(x2)",
    ),
    (
        "open elements form a subalgebra",
        &["Box(x1) == x1", "Box(x2) == x2"],
        "Box(x1 (x) x2) == x1 (x) x2",
    ),
];

/// A fixed set of premise/conclusion problems in the c-differential
/// signature, some valid and some not, all within three variables.
pub fn problem_suite() -> Vec<Problem> {
    SUITE
        .iter()
        .map(|(name, premises, conclusion)| {
            Problem::parse(name, premises, conclusion).expect("suite problems parse")
        })
        .collect()
}
