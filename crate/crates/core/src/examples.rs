//! Worked instances used by tests, the axiom lab's seed pool, and the
//! shipped fixtures.

use crate::t1::TypeOneSoftSet;
use crate::t2::TypeTwoSoftSet;
use crate::universe::Universe;

type Literal<'a> = Vec<(&'a str, Vec<(&'a str, Vec<&'a str>)>)>;

fn build(universe: &Universe, inner: Literal<'_>) -> TypeTwoSoftSet {
    TypeTwoSoftSet::from_literal(universe, inner).expect("worked example is well formed")
}

/// Three soft sets over `{x1, ..., x5}` on which both Kharal distances break
/// the triangle inequality.
pub fn kharal_triple() -> [TypeOneSoftSet; 3] {
    let u = Universe::numbered("x", 5).unwrap();
    let t = |a: Vec<(&str, Vec<&str>)>| TypeOneSoftSet::new(&u, a).unwrap();
    [
        t(vec![("α1", vec!["x1", "x2"])]),
        t(vec![("α2", vec!["x2", "x3"]), ("α3", vec!["x1", "x4"])]),
        t(vec![
            ("α1", vec!["x3", "x4", "x5"]),
            ("α2", vec!["x2", "x3"]),
            ("α3", vec!["x1", "x3", "x4"]),
        ]),
    ]
}

/// The two house descriptions over `{h1, ..., h5}`.
pub fn houses() -> (TypeTwoSoftSet, TypeTwoSoftSet) {
    let u = Universe::numbered("h", 5).unwrap();
    let f = build(
        &u,
        vec![
            (
                "beautiful",
                vec![
                    ("wooden", vec!["h2", "h5"]),
                    ("in green surroundings", vec!["h1", "h2", "h3", "h4"]),
                ],
            ),
            (
                "luxurious",
                vec![("wooden", vec!["h5"]), ("with good security", vec!["h1", "h3", "h5"])],
            ),
        ],
    );
    let g = build(
        &u,
        vec![
            (
                "spacious",
                vec![("wooden", vec!["h5"]), ("with pool", vec!["h3", "h5"])],
            ),
            (
                "beautiful",
                vec![
                    ("wooden", vec!["h2", "h5"]),
                    ("near the market", vec!["h4"]),
                    ("in green surroundings", vec!["h2", "h3"]),
                ],
            ),
        ],
    );
    (f, g)
}

/// A deterministic soft set: every element sits under exactly one pair.
pub fn deterministic() -> TypeTwoSoftSet {
    let u = Universe::numbered("x", 5).unwrap();
    build(
        &u,
        vec![
            ("α1", vec![("β1", vec!["x1", "x2"])]),
            ("α2", vec![("β2", vec!["x4"]), ("β4", vec!["x5"])]),
            ("α3", vec![("β3", vec!["x3"])]),
        ],
    )
}

pub const FOOD_ITEMS: [&str; 21] = [
    "pastry",
    "bagels",
    "brown bread",
    "mousse",
    "noodles",
    "rice",
    "fruit juice",
    "cereals",
    "pasta",
    "vegetables",
    "club sandwich",
    "chicken",
    "salad",
    "soup",
    "fish",
    "pudding",
    "milk",
    "fruits",
    "egg",
    "chapati",
    "nuts",
];

/// `(ideal, [pantry1, pantry2])` for the meal-planning decision.
pub fn pantries() -> (TypeTwoSoftSet, [TypeTwoSoftSet; 2]) {
    let u = Universe::new(FOOD_ITEMS).unwrap();
    let pantry1 = build(
        &u,
        vec![
            (
                "breakfast",
                vec![
                    ("carb. rich", vec!["pastry", "bagels"]),
                    ("fluid diet", vec!["fruit juice"]),
                    ("fibre rich", vec!["cereals", "fruits"]),
                ],
            ),
            (
                "lunch",
                vec![
                    ("carb. rich", vec!["rice", "noodles", "pasta"]),
                    ("protein rich", vec!["fish"]),
                    ("fibre rich", vec!["vegetables", "salad"]),
                ],
            ),
            (
                "dinner",
                vec![
                    ("protein rich", vec!["chicken"]),
                    ("soft diet", vec!["soup"]),
                    ("fibre rich", vec!["salad"]),
                ],
            ),
            (
                "supper",
                vec![("carb. rich", vec!["club sandwich"]), ("soft diet", vec!["pudding"])],
            ),
        ],
    );
    let pantry2 = build(
        &u,
        vec![
            (
                "breakfast",
                vec![
                    ("carb. rich", vec!["bagels"]),
                    ("protein rich", vec!["egg", "chicken"]),
                    ("fluid diet", vec!["fruit juice", "milk"]),
                    ("fibre rich", vec!["brown bread", "cereals", "fruits"]),
                ],
            ),
            (
                "lunch",
                vec![
                    ("carb. rich", vec!["rice", "noodles"]),
                    ("fibre rich", vec!["vegetables"]),
                    ("soft diet", vec!["mousse"]),
                ],
            ),
            (
                "dinner",
                vec![
                    ("carb. rich", vec!["noodles"]),
                    ("protein rich", vec!["fish"]),
                    ("fibre rich", vec!["chapati", "vegetables"]),
                ],
            ),
            (
                "supper",
                vec![("protein rich", vec!["chicken"]), ("fibre rich", vec!["nuts", "salad"])],
            ),
        ],
    );
    let ideal = build(
        &u,
        vec![
            (
                "breakfast",
                vec![
                    ("fibre rich", vec!["cereals", "fruits", "brown bread"]),
                    ("fluid diet", vec!["milk"]),
                ],
            ),
            (
                "lunch",
                vec![
                    ("protein rich", vec!["fish", "chicken", "egg"]),
                    ("fibre rich", vec!["vegetables", "salad", "chapati"]),
                ],
            ),
            (
                "dinner",
                vec![
                    ("protein rich", vec!["chicken", "fish"]),
                    ("soft diet", vec!["soup"]),
                    ("fibre rich", vec!["salad", "vegetables", "chapati"]),
                ],
            ),
            (
                "supper",
                vec![("soft diet", vec!["soup"]), ("fibre rich", vec!["salad"])],
            ),
        ],
    );
    (ideal, [pantry1, pantry2])
}
