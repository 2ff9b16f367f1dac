import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-experiments",
        action="store_true",
        default=False,
        help="run the full (slow) experiment reproduction tests",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-experiments"):
        return
    skip = pytest.mark.skip(reason="slow experiment; pass --run-experiments")
    for item in items:
        if "experiment" in item.keywords:
            item.add_marker(skip)
