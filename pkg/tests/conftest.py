import warnings

import pytest

with warnings.catch_warnings():
    # some starlette builds warn at TestClient import time
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from cubicbrauer.service import create_app


@pytest.fixture(scope="session")
def client() -> TestClient:
    return TestClient(create_app())
