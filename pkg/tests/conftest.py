import pytest
from mdlseg.seg import bundled_path, load_corpus, load_inventory, load_rules, parse_corpus


@pytest.fixture(scope="session")
def inventory():
    return load_inventory()


@pytest.fixture(scope="session")
def kitty(inventory):
    return load_corpus(bundled_path("kitty.txt"), inventory)


@pytest.fixture(scope="session")
def child(inventory):
    return load_corpus(bundled_path("child.txt"), inventory)


@pytest.fixture(scope="session")
def adult(inventory):
    return load_corpus(bundled_path("adult.txt"), inventory)


@pytest.fixture(scope="session")
def english_rules(inventory):
    return load_rules(bundled_path("english.rules"), inventory)


@pytest.fixture
def make_corpus(inventory):
    '''
    Builds a corpus from word-spaced lines.
    '''
    def build(*lines):
        return parse_corpus("\n".join(lines) + "\n", inventory)
    return build
