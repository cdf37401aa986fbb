# Hyperspace C(p,X) toolkit for finite trees
