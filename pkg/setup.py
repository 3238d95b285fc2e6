# setuptools is required. Without it, fall back to an installed ez_setup
# package, or fail with a message.
try:
    from setuptools import setup
except ImportError:
    try:
        import ez_setup

        ez_setup.use_setuptools()
    except ImportError:
        raise ImportError(
            "qsufficiency could not be installed, probably because"
            " neither setuptools nor ez_setup are installed on "
            "this computer. \nInstall ez_setup "
            "([sudo] pip install ez_setup) and try again."
        )

from setuptools import setup, find_packages

exec(open("qsufficiency/version.py").read())  # loads __version__

setup(
    name="qsufficiency",
    version=__version__,
    description=(
        "Sufficient maps, minimal sufficient algebras and Koashi-Imoto"
        " decompositions of quantum statistical models."
    ),
    long_description=open("pypi-readme.rst").read(),
    license="MIT",
    keywords=(
        "quantum statistics sufficiency conditional expectation "
        "Jordan algebra Koashi-Imoto decomposition"
    ),
    packages=find_packages(exclude=["docs", "tests", "tests.*"]),
    include_package_data=True,
    scripts=["scripts/qsufficiency"],
    install_requires=["numpy", "scipy", "proglog", "docopt", "flametree"],
    tests_require=["pytest"],
)
