from seconet.vaccination.strategies import (
    AuditEntry,
    VaccinationCampaign,
    VaccinationPlan,
    apply_vaccination,
    build_plan,
    compute_scores,
    eligible,
    eligible_ids,
    rank_by_score,
    select_age_based,
    select_by_centrality,
    select_ring,
)

__all__ = [
    "AuditEntry",
    "VaccinationCampaign",
    "VaccinationPlan",
    "apply_vaccination",
    "build_plan",
    "compute_scores",
    "eligible",
    "eligible_ids",
    "rank_by_score",
    "select_age_based",
    "select_by_centrality",
    "select_ring",
]
