import json

import pytest

from ultralogic.config import RunConfig, load_config
from ultralogic.errors import ConfigInvalid


def test_defaults_validate():
    cfg = RunConfig().validate()
    assert cfg.base == ["bold", "kind"]
    assert cfg.step_budget == 7 and cfg.seed == 0


def test_round_trip(tmp_path):
    cfg = RunConfig(base=["calm"], depth=5, seed=3)
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg.to_dict()))
    assert load_config(path) == cfg


@pytest.mark.parametrize(
    "data, where",
    [
        ({"depth": 99}, "$.depth"),
        ({"depth": "3"}, "$.depth"),
        ({"superstructure_depth": 5}, "$.superstructure_depth"),
        ({"step_budget": 0}, "$.step_budget"),
        ({"engine": "magic"}, "$.engine"),
        ({"base": []}, "$.base"),
        ({"alphabet": ["a", "a"]}, "$.alphabet"),
        ({"samples": 0}, "$.samples"),
        ({"colour": "red"}, "$.colour"),
    ],
)
def test_rejections_name_the_key(data, where):
    with pytest.raises(ConfigInvalid) as err:
        RunConfig.from_dict(data)
    assert err.value.path == where


def test_not_an_object():
    with pytest.raises(ConfigInvalid):
        RunConfig.from_dict([1, 2])


def test_bad_files(tmp_path):
    with pytest.raises(ConfigInvalid):
        load_config(tmp_path / "missing.json")
    broken = tmp_path / "broken.json"
    broken.write_text("{depth: 3")
    with pytest.raises(ConfigInvalid):
        load_config(broken)
