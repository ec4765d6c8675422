from setuptools import find_packages, setup

with open('README.md') as readme:
    long_description = readme.read()

with open('requirements.txt') as reqs:
    install_requires = [
        line for line in reqs.read().split('\n') if (line and not
                                                     line.startswith('--'))
    ]

setup(
    name = 'pdfsieve',
    version = '1.0.0',
    license = 'GNU GENERAL PUBLIC LICENSE',
    description = 'Prime detecting function sieves, twin and 2k-gap pair counts, and density checks.',
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    python_requires='>=3.9',
    classifiers=[
        'Environment :: Console',
        'Framework :: Django',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    zip_safe=False,
    install_requires=install_requires
)
