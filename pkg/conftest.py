pytest_plugins = "datalad_next.tests.fixtures"
