import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--all",
        action="store_true",
        default=False,
        help="also run slow tests (large exhaustive enumerations, big searches)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--all"):
        return
    skip_slow = pytest.mark.skip(reason="slow; enable with --all")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
