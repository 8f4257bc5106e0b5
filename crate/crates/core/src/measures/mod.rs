pub mod distance;
pub mod entropy;
pub mod similarity;
mod value;

pub use distance::{
    dm_t1, dm_t2, dp_t1, dp_t2, evaluate_t1, evaluate_t2, kharal_euclidean, kharal_normalized_euclidean, ndm_t2,
    ndp_t2, t2_rational, DistanceMeasureId, UnknownMeasure,
};
pub use entropy::{entropy_t2, trace_total};
pub use similarity::{similarity_profile, similarity_sd, similarity_se, similarity_sm, ParameterScoreProfile};
pub use value::{rational_string, round_decimal, MeasureValue};
