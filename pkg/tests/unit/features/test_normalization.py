import numpy as np
import pytest

from src.errors import ShapeMismatchError, TooFewRowsError
from src.features.extraction import extract_global
from src.features.models import GlobalFeatures, MinMaxNormalizer, ZScoreNormalizer
from src.features.normalization import fit_node_normalizer, minmax_fit_apply, zscore_fit_apply
from src.features.table import read_features_csv, write_features_csv


def test_minmax_scales_to_unit_interval():
    normalizer, scaled = minmax_fit_apply([[1.0, 5.0], [3.0, 5.0], [2.0, 5.0]])

    assert scaled[:, 0].tolist() == [0.0, 1.0, 0.5]
    assert scaled[:, 1].tolist() == [0.0, 0.0, 0.0]
    assert normalizer.x_max == [3.0, 5.0]


def test_minmax_needs_rows():
    with pytest.raises(TooFewRowsError):
        MinMaxNormalizer.fit(np.zeros((0, 2)))


def test_zscore_uses_population_sigma():
    normalizer, scaled = zscore_fit_apply([[0.0, 1.0], [2.0, 1.0]])

    assert normalizer.mu == [1.0, 1.0]
    assert normalizer.sigma == [1.0, 0.0]
    assert scaled[:, 0].tolist() == [-1.0, 1.0]
    assert scaled[:, 1].tolist() == [0.0, 0.0]


def test_zscore_needs_two_rows():
    with pytest.raises(TooFewRowsError):
        ZScoreNormalizer.fit([[1.0, 2.0]])


def test_transform_rejects_other_width():
    normalizer = ZScoreNormalizer.fit([[0.0, 1.0], [1.0, 2.0]])

    with pytest.raises(ShapeMismatchError):
        normalizer.transform([[0.0, 1.0, 2.0]])


def test_node_normalizer_is_shared_across_graphs():
    normalizer = fit_node_normalizer([[[1, 1], [2, 1]], [[4, 3]]])

    assert normalizer.x_min == [1.0, 1.0]
    assert normalizer.x_max == [4.0, 3.0]


def test_node_normalizer_needs_graphs():
    with pytest.raises(TooFewRowsError):
        fit_node_normalizer([])


def test_from_vector_rejects_wrong_length():
    with pytest.raises(ShapeMismatchError):
        GlobalFeatures.from_vector([1.0, 2.0])


def test_feature_table_round_trip(tmp_path, petersen, diamond, star5):
    features = {
        "petersen": extract_global(petersen),
        "diamond": extract_global(diamond),
        "star": extract_global(star5),
    }
    path = tmp_path / "features.csv"

    write_features_csv(features, path)

    assert read_features_csv(path) == features
    assert path.read_text().splitlines()[0].startswith("instance_id,V,E,d_max,d_avg,D,r,T")
