import importlib
import re

from strictdom import error, logger

# Fixture ids are lower-case words joined by dashes, e.g. "five-lines".
fixture_id_re = re.compile(r'^[a-z0-9][a-z0-9-]*$')


def load(name):
    mod_name, attr_name = name.split(":")
    mod = importlib.import_module(mod_name)
    fn = getattr(mod, attr_name)
    return fn


class FixtureSpec(object):
    """A named game fixture.

    Args:
        id (str): The fixture ID
        entry_point (str or callable): Function building the Game (e.g. module.name:function)
        description (Optional[str]): One line saying where the game comes from
        kwargs (dict): The kwargs to pass to the entry point
    """

    def __init__(self, id, entry_point, description=None, kwargs=None):
        if not fixture_id_re.search(id):
            raise error.Error('Attempted to register malformed fixture ID: {}. (All IDs must match {}.)'.format(
                id, fixture_id_re.pattern))
        self.id = id
        self.entry_point = entry_point
        self.description = description
        self._kwargs = {} if kwargs is None else kwargs

    def make(self, **kwargs):
        """Builds the game with the registered kwargs, updated by `kwargs`."""
        _kwargs = self._kwargs.copy()
        _kwargs.update(kwargs)
        fn = self.entry_point if callable(self.entry_point) else load(self.entry_point)
        return fn(**_kwargs)

    def __repr__(self):
        return "FixtureSpec({})".format(self.id)


class FixtureRegistry(object):
    """Register a game fixture by ID. An ID always resolves to the same game,
    so golden files and reports that name a fixture stay comparable.
    """

    def __init__(self):
        self.fixture_specs = {}

    def make(self, id, **kwargs):
        logger.info('Making fixture: %s', id)
        return self.spec(id).make(**kwargs)

    def all(self):
        return self.fixture_specs.values()

    def ids(self):
        return sorted(spec.id for spec in self.all())

    def spec(self, id):
        if not fixture_id_re.search(id):
            raise error.UnregisteredFixture('Malformed fixture ID: {!r}. (All IDs must match {}.)'.format(
                id, fixture_id_re.pattern))
        try:
            return self.fixture_specs[id]
        except KeyError:
            raise error.UnregisteredFixture('No registered fixture with id: {} (known: {})'.format(id, self.ids()))

    def register(self, id, **kwargs):
        if id in self.fixture_specs:
            raise error.Error('Cannot re-register id: {}'.format(id))
        self.fixture_specs[id] = FixtureSpec(id, **kwargs)

# Have a global registry
registry = FixtureRegistry()

def register(id, **kwargs):
    return registry.register(id, **kwargs)

def make(id, **kwargs):
    return registry.make(id, **kwargs)

def spec(id):
    return registry.spec(id)
