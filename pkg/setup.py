from setuptools import setup, find_packages

setup(
    name="normalizador-hamiltoniano",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "numpy>=1.21",
        "scipy>=1.7",
        "pandas>=1.3.3",
        "python-dotenv>=0.19.0",
        "pydantic>=2.0",
        "tqdm>=4.62.2",
    ],
    entry_points={
        "console_scripts": [
            "normalizador=src.main:main",
        ],
    },
    python_requires=">=3.8",
    author="Samuel",
    author_email="samuel@example.com",
    description="Formas normais de Birkhoff e Kolmogorov e séries de Lindstedt para osciladores quase integráveis",
    keywords="hamiltoniano, forma normal, kolmogorov, birkhoff, lindstedt, séries de poisson",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
    ],
)
