# Pytest configuration file

from pseudohopf.fibrations import FibrationId
from pseudohopf.commands import Command

# Quotient and composite instances are verified at the smallest base dimension to keep the suite fast
QUOTIENT_DIMENSION = 1
SUITE_SAMPLES = 1
SUITE_SEED = 7

all_params = {
    'test_fibration_suite': {
        'params': ["fibration_id", "t"],
        'values': [],
    },
    'test_command_parsing': {
        'params': ["command_string", "expected"],
        'values': [],
    }
}


def generate_tests_fibration_suite(metafunc):
    for fibration_id in FibrationId.all():
        indices = range(QUOTIENT_DIMENSION + 1) if fibration_id in FibrationId.with_index_parameter() else [0]
        for t in indices:
            all_params["test_fibration_suite"]["values"].append([fibration_id, t])

    fct_name = metafunc.function.__name__
    if fct_name in all_params:
        params = all_params[fct_name]
        metafunc.parametrize(params["params"], params["values"])


def generate_tests_command_parsing(metafunc):
    for command in Command.all():
        all_params["test_command_parsing"]["values"].append([command.name, command])
    all_params["test_command_parsing"]["values"].append(["check-pi9", Command.check_pi9])

    fct_name = metafunc.function.__name__
    if fct_name in all_params:
        params = all_params[fct_name]
        metafunc.parametrize(params["params"], params["values"])


def pytest_generate_tests(metafunc):
    fct_name = metafunc.function.__name__
    if fct_name == "test_fibration_suite":
        generate_tests_fibration_suite(metafunc)
    elif fct_name == "test_command_parsing":
        generate_tests_command_parsing(metafunc)
