from setuptools import setup, find_packages

setup(
    name="theta_orbits",
    version="0.1.0",
    packages=find_packages(where='.', include=['theta_orbits*']),
    install_requires=[
        "numpy>=1.26,<2",
        "scipy>=1.11",
        "sympy>=1.12",
        "pydantic>=2.7,<3",
        "typer>=0.12",
        "rich>=13",
        "coloredlogs>=15",
        "python-dotenv>=1.0",
        "orjson>=3.9",
    ],
    extras_require={"test": ["pytest>=8"]},
    entry_points={"console_scripts": ["theta-orbits = theta_orbits.cli.main:app"]},
)
