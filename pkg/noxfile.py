"""
Automated testing via nox (https://nox.thea.codes/).

Combined with a working installation of nox (see ``nox`` documentation), this file
specifies the checks run against hdet: the fast unit suite under coverage, the slow
numerical acceptance suite, a smoke run of the command-line tool, and the usual
documentation, formatting, lint and packaging checks.

To see available tasks, run ``python -m nox --list``. To run the fast suite on every
supported Python, run ``python -m nox --tag tests``. The acceptance suite is tagged
``release`` and is skipped by default; run it with ``python -m nox --session
tests_end_to_end``.

"""

import os
import pathlib
import shutil
import typing

import nox

nox.options.default_venv_backend = "venv"
nox.options.keywords = "not release"
nox.options.reuse_existing_virtualenvs = True

PACKAGE_NAME = "hdet"

SUPPORTED_PYTHONS = ["3.8", "3.9", "3.10", "3.11", "3.12"]
TOOLING_PYTHON = ["3.12"]

# Paths every formatter and linter looks at.
CODE_PATHS = ("src/", "tests/", "docs/", "noxfile.py")

NOXFILE_PATH = pathlib.Path(__file__).parents[0]
ARTIFACT_PATHS = (
    NOXFILE_PATH / "src" / f"{PACKAGE_NAME}.egg-info",
    NOXFILE_PATH / "build",
    NOXFILE_PATH / "dist",
    NOXFILE_PATH / "__pycache__",
    NOXFILE_PATH / "src" / "__pycache__",
    NOXFILE_PATH / "src" / PACKAGE_NAME / "__pycache__",
    NOXFILE_PATH / "tests" / "__pycache__",
)


def clean(paths: typing.Iterable[os.PathLike] = ARTIFACT_PATHS) -> None:
    """
    Clean up after a test run.

    """
    [
        shutil.rmtree(path) if path.is_dir() else path.unlink()
        for path in paths
        if path.exists()
    ]


def run_module(session: nox.Session, module: str, *args: str, **kwargs) -> None:
    """
    Run ``module`` with the session's interpreter in isolated mode.

    """
    session.run(f"python{session.python}", "-Im", module, *args, **kwargs)


def build_wheel(session: nox.Session) -> str:
    """
    Build a wheel into a temporary directory and return that directory.

    """
    package_dir = f"{session.create_tmp()}/build"
    run_module(session, "build", "--version")
    run_module(session, "build", "--wheel", "--outdir", package_dir)
    return package_dir


# Tasks which run the package's test suites.
# -----------------------------------------------------------------------------------


@nox.session(python=SUPPORTED_PYTHONS, tags=["tests"])
def tests_with_coverage(session: nox.Session) -> None:
    """
    Run the unit tests, with coverage report.

    The run fails if coverage drops below the threshold set in ``pyproject.toml``.

    """
    session.install(".[tests]")
    session.run(
        f"python{session.python}",
        "-Wonce::DeprecationWarning",
        "-Im",
        "coverage",
        "run",
        "--source",
        PACKAGE_NAME,
        "-m",
        "unittest",
        "discover",
    )
    run_module(session, "coverage", "report", "--show-missing")
    clean()


@nox.session(python=SUPPORTED_PYTHONS, tags=["tests", "release"])
def tests_end_to_end(session: nox.Session) -> None:
    """
    Run the acceptance suite: full-size brute-force and Monte Carlo checks of the
    bound over the whole sweep set.

    ``HDET_THREADS`` is passed through, so the worker count can be capped on
    shared machines; results do not depend on it.

    """
    session.install(".[tests]")
    session.run(
        f"python{session.python}",
        "-Wonce::DeprecationWarning",
        "-Im",
        "unittest",
        "discover",
        "--pattern",
        "end_to_end*",
        env={"HDET_THREADS": os.getenv("HDET_THREADS", "")},
    )
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["tests"])
def tests_cli(session: nox.Session) -> None:
    """
    Smoke-test the installed ``hdet`` command: every sub-command runs and exits
    cleanly on a known-good input.

    """
    session.install(".")
    session.run("hdet", "--version")
    session.run(
        "hdet", "bound", "--m", "1", "--lambda", "1", "--gamma", "0", "--beta", "1/2"
    )
    session.run("hdet", "tau", "--m", "1", "--lambda", "1", "--gamma", "0", "--audit")
    session.run(
        "hdet",
        "corollary",
        "--kind",
        "lambda1fold",
        "--lambda",
        "3/2",
        "--beta",
        "1/5",
    )
    session.run(
        "hdet",
        "sweep",
        "--m",
        "1,2",
        "--lambda",
        "1",
        "--gamma",
        "0",
        "--beta",
        "0,1/2",
        "--format",
        "csv",
    )
    session.run(
        "hdet",
        "verify",
        "--m",
        "2",
        "--lambda",
        "3/2",
        "--gamma",
        "1",
        "--beta",
        "1/2",
        "--samples",
        "10000",
    )
    session.run("hdet", "figures", "--which", "Kcurve", "--betas", "0,1/2")
    session.run("hdet", "invert", "--m", "1", "--coeffs", "1/2,1/3,1/4")
    session.run("hdet", "hankel", "--coeffs", "1,2,1,3", "--q", "2", "--n", "2")
    clean()


# Tasks which test the package's documentation.
# -----------------------------------------------------------------------------------


@nox.session(python=TOOLING_PYTHON, tags=["docs"])
def docs_build(session: nox.Session) -> None:
    """
    Build the package's documentation as HTML.

    """
    session.install(".[docs]")
    session.chdir("docs")
    run_module(
        session,
        "sphinx",
        "-b",
        "html",
        "-d",
        f"{session.bin}/../tmp/doctrees",
        ".",
        f"{session.bin}/../tmp/html",
    )
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["docs"])
def docs_docstrings(session: nox.Session) -> None:
    """
    Enforce the presence of docstrings on all modules, classes, functions, and
    methods.

    """
    # interrogate imports pkg_resources, and venv no longer installs setuptools.
    session.install("interrogate", "setuptools")
    run_module(session, "interrogate", "--version")
    run_module(session, "interrogate", "-v", "src/", "tests/", "noxfile.py")
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["docs"])
def docs_spellcheck(session: nox.Session) -> None:
    """
    Spell-check the package's documentation against ``docs/spelling_wordlist.txt``.

    """
    session.install("pyenchant", "sphinxcontrib-spelling", ".[docs]")
    build_dir = session.create_tmp()
    session.chdir("docs")
    run_module(
        session,
        "sphinx",
        "-W",  # Misspelled words fail the build.
        "-b",
        "spelling",
        "-d",
        f"{build_dir}/doctrees",
        ".",
        f"{build_dir}/html",
        # Lets pyenchant find the enchant C library on Apple Silicon.
        env={"PYENCHANT_LIBRARY_PATH": os.getenv("PYENCHANT_LIBRARY_PATH", "")},
    )
    clean()


# Code formatting checks.
#
# These checks do *not* reformat code, but will fail a CI build if they find any code
# that needs reformatting.
# -----------------------------------------------------------------------------------


@nox.session(python=TOOLING_PYTHON, tags=["formatters"])
def format_black(session: nox.Session) -> None:
    """
    Check code formatting with Black.

    """
    session.install("black>=24.0,<25.0")
    run_module(session, "black", "--version")
    run_module(session, "black", "--check", "--diff", *CODE_PATHS)
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["formatters"])
def format_isort(session: nox.Session) -> None:
    """
    Check import ordering with isort.

    """
    session.install("isort")
    run_module(session, "isort", "--version")
    run_module(session, "isort", "--check-only", "--diff", *CODE_PATHS)
    clean()


# Linters.
# -----------------------------------------------------------------------------------


@nox.session(python=TOOLING_PYTHON, tags=["linters", "security"])
def lint_bandit(session: nox.Session) -> None:
    """
    Lint code with the Bandit security analyzer.

    """
    session.install("bandit[toml]")
    run_module(session, "bandit", "--version")
    run_module(session, "bandit", "-c", "./pyproject.toml", "-r", "src/", "tests/")
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["linters"])
def lint_flake8(session: nox.Session) -> None:
    """
    Lint code with flake8.

    """
    session.install("flake8", "flake8-bugbear")
    run_module(session, "flake8", "--version")
    run_module(session, "flake8", *CODE_PATHS)
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["linters"])
def lint_pylint(session: nox.Session) -> None:
    """
    Lint code with Pylint.

    """
    # Pylint needs numpy importable, so the package is installed with its
    # dependencies.
    session.install(".", "pylint")
    run_module(session, "pylint", "--version")
    run_module(session, "pylint", "src/", "tests/")
    clean()


# Packaging checks.
# -----------------------------------------------------------------------------------


@nox.session(python=TOOLING_PYTHON, tags=["packaging"])
def package_build(session: nox.Session) -> None:
    """
    Check that the package builds.

    """
    session.install("build")
    run_module(session, "build", "--version")
    run_module(session, "build")
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["packaging"])
def package_description(session: nox.Session) -> None:
    """
    Check that the package description will render on the Python Package Index.

    """
    session.install("build", "twine")
    package_dir = build_wheel(session)
    run_module(session, "twine", "--version")
    run_module(session, "twine", "check", f"{package_dir}/*")
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["packaging"])
def package_manifest(session: nox.Session) -> None:
    """
    Check that the set of files in the package matches the set under version control.

    """
    session.install("check-manifest")
    run_module(session, "check_manifest", "--version")
    run_module(session, "check_manifest", "--verbose")
    clean()


@nox.session(python=TOOLING_PYTHON, tags=["packaging"])
def package_wheel(session: nox.Session) -> None:
    """
    Check the built wheel package for common errors.

    """
    session.install("build", "check-wheel-contents")
    package_dir = build_wheel(session)
    run_module(session, "check_wheel_contents", "--version")
    run_module(session, "check_wheel_contents", package_dir)
    clean()
