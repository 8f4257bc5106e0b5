use num_rational::Rational64;

use crate::t2::TypeTwoSoftSet;

/// `Σ_x (|F*_x| + |F**_x|)`.
pub fn trace_total(f: &TypeTwoSoftSet) -> u64 {
    f.trace_sizes().iter().map(|&(a, b)| (a + b) as u64).sum()
}

/// Entropy of a Type-2 soft set: 1 for null and absolute sets, otherwise
/// `1 − 2|X| / Σ_x (|F*_x| + |F**_x|)`. A set with no element under any
/// parameter is treated as null.
pub fn entropy_t2(f: &TypeTwoSoftSet) -> Rational64 {
    let total = trace_total(f);
    if f.is_null() || f.is_absolute() || total == 0 {
        return Rational64::from_integer(1);
    }
    Rational64::from_integer(1) - Rational64::new(2 * f.universe().len() as i64, total as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::universe::Universe;

    #[test]
    fn worked_values() {
        let (f, _) = examples::houses();
        assert_eq!(trace_total(&f), 17);
        assert_eq!(entropy_t2(&f), Rational64::new(7, 17));
        assert_eq!(entropy_t2(&examples::deterministic()), Rational64::from_integer(0));
    }

    #[test]
    fn boundary_shapes() {
        let u = Universe::numbered("x", 3).unwrap();
        let shape = [("a", vec!["b", "c"]), ("d", vec!["b"])];
        let one = Rational64::from_integer(1);
        assert_eq!(entropy_t2(&TypeTwoSoftSet::null(&u, shape.clone()).unwrap()), one);
        assert_eq!(entropy_t2(&TypeTwoSoftSet::absolute(&u, shape).unwrap()), one);
        assert_eq!(entropy_t2(&TypeTwoSoftSet::empty(&u)), one);
    }

    #[test]
    fn union_and_intersection_of_houses() {
        let (f, g) = examples::houses();
        assert_eq!(entropy_t2(&f.union(&g).unwrap()), Rational64::new(6, 11));
        assert_eq!(entropy_t2(&f.intersection(&g).unwrap()), Rational64::new(-3, 7));
    }
}
