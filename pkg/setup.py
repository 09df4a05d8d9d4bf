try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

config = {
    'description': 'parryword - special factors of words fixed by Parry number substitutions',
    'long_description': 'Brute-force factor indexes, left special branches and closed-form '
                        'checks for the fixed points of canonical substitutions of Parry numbers',
    'author': 'parryword developers',
    'version': '1.0.0',
    'packages': ['PARRY', 'PARRY.modules', 'PARRY.plugins'],
    'package_data': {'PARRY': ['config/*.yaml'], 'PARRY.plugins': ['*.yapsy-plugin']},
    'install_requires': ['PyYAML', 'Yapsy', 'numpy', 'networkx', 'mpmath'],
    'extras_require': {'test': ['pytest']},
    'python_requires': '>=3.7',
    'entry_points': {'console_scripts': ['parryword = PARRY.parryword:main']},
    'name': 'parryword'
}

setup(**config)
