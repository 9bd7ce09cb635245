//! Closed-form predictors, parameter fitting, and structural reports for
//! the community models.

mod block_model;
mod community;
mod connectivity;
mod fit;
mod predict;
mod profile;

pub use block_model::{block_model_cycle_bound, CycleBound};
pub use community::community_graph;
pub use connectivity::{connectivity_report, ConnectivityReport};
pub use fit::{fit_roc, fit_roc_clustering, ClusteringFit, ClusteringPin, FitResult, Regime};
pub use predict::{
    droc_predict_cc, predict_roc_stats, predict_roc_stats_exact, ratio_laws, DrocCcPrediction,
    Prediction, RegimeWarning,
};
pub use profile::{degree_cc_profile, ProfileBinning, ProfileRow};
