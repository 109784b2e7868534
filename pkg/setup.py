import setuptools
with open("README.md", "r") as fh:
    long_description = fh.read()
setuptools.setup(
     name='BilliardsA2',
     version='0.1',
     description="Billiards dynamics on the dominant cone of type A2 and "
                 "predictions of p-canonical bases",
     long_description=long_description,
     long_description_content_type="text/markdown",
     packages=setuptools.find_packages(exclude=['tests']),
     python_requires='>=3.8',
     install_requires=['click>=7.0'],
     extras_require={
         'tests': ['pytest', 'hypothesis'],
         'docs': ['sphinx'],
     },
     entry_points={
         'console_scripts': ['billiards-a2=BilliardsA2.cli:main'],
     },
     classifiers=[
         "Programming Language :: Python :: 3",
         "License :: OSI Approved :: Apache Software License",
         "Operating System :: OS Independent",
     ],
 )
