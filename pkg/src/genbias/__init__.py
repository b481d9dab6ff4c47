"""Gender-bias audit engine for static and contextualized word embeddings.

The package measures gender bias in a model-agnostic way: embeddings enter
through the CEMB1 binary interchange format (or a word2vec text table, or a
built-in toy contextual provider), and five measures are computed over them:
gender-subspace spectrum, direct bias, biased-word clustering, bias
generalization via an RBF-SVM, and KNN stereotype correlation.
"""

from genbias.errors import ConfigError, DegenerateDataError, FormatError, GenbiasError
from genbias.corpus import (
    Corpus,
    DefinitionalPair,
    Occurrence,
    OccurrenceIndex,
    WordEntry,
    WordList,
    filter_cooccurrence,
    index_occurrences,
    load_corpus,
    load_definitional_pairs,
    load_word_list,
    sample_occurrences,
    swap_pair,
)
from genbias.embformat import (
    ContextualVector,
    EmbeddingStore,
    WordTable,
    load_word2vec_text,
    read_cemb,
    toy_contextual,
    write_cemb,
)
from genbias.linalg import PcaResult, cosine, mean_center, pca, pearson
from genbias.metrics import (
    ClusteringOutcome,
    GenderSubspace,
    KnnOutcome,
    SvmModel,
    cluster_accuracy,
    direct_bias,
    gender_subspace,
    kmeans,
    knn_stereotype_correlation,
    random_baseline_spectrum,
    svm_accuracy,
    svm_predict,
    svm_rbf_train,
    word_bias,
)
from genbias.harness import (
    ExperimentConfig,
    ExperimentReport,
    canonical_json,
    child_seed,
    fnv1a64,
    make_planted_store,
    run_audit,
)

__version__ = "0.1.0"
