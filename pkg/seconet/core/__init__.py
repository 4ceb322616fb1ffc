from seconet.core.growth import (
    attachment_probabilities,
    build_network,
    form_secondary_links,
    grow_network,
    grow_step,
    introduce_nodes,
    secondary_link_target,
)
from seconet.core.network import (
    ContactNetwork,
    LinkKind,
    Phase,
    Relationship,
    remove_expired_links,
    removal_rate,
    sample_relationship_duration,
    seed_links,
)
from seconet.core.population import Person, Population, fitness, fitness_to, sample_population

__all__ = [
    "ContactNetwork",
    "LinkKind",
    "Person",
    "Phase",
    "Population",
    "Relationship",
    "attachment_probabilities",
    "build_network",
    "fitness",
    "fitness_to",
    "form_secondary_links",
    "grow_network",
    "grow_step",
    "introduce_nodes",
    "remove_expired_links",
    "removal_rate",
    "sample_population",
    "sample_relationship_duration",
    "secondary_link_target",
    "seed_links",
]
