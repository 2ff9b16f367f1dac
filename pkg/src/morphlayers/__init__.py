"""Layered morphological feature structures and Georgian paradigm tooling."""

from .features import (
    DEFAULT_INVENTORY,
    FeatureInventory,
    FeatureStructure,
    FlatEncodingError,
    RelocationRule,
    TagError,
    UnificationClash,
    Violation,
    default_inventory,
    from_flat,
    load_inventory,
    parse_tag,
    serialize,
    subsumes,
    to_flat,
    unify,
    validate,
)
from .unimorph import (
    InflectionTable,
    UniMorphEntry,
    UniMorphFormatError,
    group_by_lemma,
    make_table,
    read_unimorph,
    write_unimorph,
)
from .georgian import (
    AgreementMarkerTable,
    GenerationError,
    GeorgianConfig,
    LexiconEntry,
    LexiconError,
    ParadigmGrid,
    PartOverride,
    Screeve,
    TransliterationError,
    default_config,
    detransliterate,
    generate_form,
    generate_paradigm,
    generate_paradigms,
    load_config,
    load_lexicon,
    make_synthetic_lexicon,
    paradigm_slots,
    restrict_objects_to_third,
    sample_lexicon,
    transliterate,
)
from .splitting import (
    ReinflectionInstance,
    SplitError,
    SplitSpec,
    make_instances,
    read_instances,
    split_form,
    split_lemma,
    write_instances,
)
from .metrics import (
    EvalReport,
    HarnessError,
    edit_distance,
    evaluate,
    learning_curve,
    read_predictions,
)
from .baseline import (
    BaselineModel,
    RewriteRule,
    predict_all,
    predict_baseline,
    train_baseline,
)

__version__ = "0.1.0"
