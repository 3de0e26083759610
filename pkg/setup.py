import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="mdlseg",
    use_scm_version=True,
    description="Minimum description length word segmentation of phonemically transcribed speech.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests"]),
    package_data={"mdlseg": ["data/*"]},
    classifiers=[
        "Programming Language :: Python :: 3.7",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent ",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Information Analysis"
    ],
    setup_requires=["setuptools_scm"],
    install_requires=[
        "numpy>=1.20"
    ],
    extras_require={
        "test": ["pytest"]
    },
    entry_points={
        "console_scripts": ["mdlseg = mdlseg.cli:main"]
    },
    keywords='word segmentation minimum description length phonotactics lexicon induction'
)
