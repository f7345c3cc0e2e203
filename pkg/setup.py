from setuptools import setup, find_packages

# Read README for long description
with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="basis-casimir",
    version="0.1.0",
    author="Your Name",
    author_email="your.email@example.com",
    description="Casimir energy between plates moving in frame-dragging spacetimes",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["casimir_drag", "casimir_drag.*"]),
    package_data={"casimir_drag": ["py.typed"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.8",
        "joblib>=1.2",
        "python-dotenv>=1.0.0",
    ],
    extras_require={"test": ["pytest>=7.0"]},
    entry_points={"console_scripts": ["basis-casimir=casimir_drag.cli:main"]},
)
